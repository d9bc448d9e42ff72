from families.generators import (
    bridge_hyperedges,
    connected_sum,
    cycle_graph,
    disjoint_union,
    hyperflower,
    path_graph,
    perturb,
    r_complete,
    r_complete_operator,
    single_hyperedge,
    star_graph,
)
from families.spec import (
    FamilyKind,
    FamilyPairSpec,
    FamilySpec,
    build,
    family_from_dict,
    family_operator,
    parse_family,
)
from families.oracles import (
    AtomFreeLimit,
    ClosedFormSpectrum,
    NoLimit,
    VerificationReport,
    closed_form_spectrum,
    hyperflower_adjacency_residuals,
    kh_hyperflower_discrepancy,
    spectral_class_limit,
    verify_closed_form,
)
