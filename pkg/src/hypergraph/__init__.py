from hypergraph.model import (
    Hyperedge,
    OrientedHypergraph,
    ValidationIssue,
    ValidationResult,
    cardinality,
    degree,
    ensure_valid,
    make_hypergraph,
    validate,
)
from hypergraph.structure import (
    all_inputs_variant,
    dual,
    is_bipartite,
    is_bipartition,
    is_p_regular,
    is_simple_graph,
)
from hypergraph.generator import random_hypergraph, random_simple_graph
from hypergraph.io import (
    hypergraph_from_dict,
    hypergraph_from_json,
    hypergraph_to_dict,
    hypergraph_to_json,
    load_hypergraph,
)
