from analysis.difference import HyperedgeDifference, hyperedge_difference
from analysis.norms import (
    BoundReport,
    delta_structure_check,
    difference_norm_check,
    frobenius_norm,
    schatten1_norm,
    wielandt_hoffman_check,
)
from analysis.interlacing import (
    InterlacingReport,
    StabilityReport,
    differing_rows,
    interlacing_check,
    multiplicity_stability_check,
    rows_within,
)
from analysis.distances import (
    build_battery,
    default_match_tol,
    tv_distance,
    weak_star_bound,
    weak_star_gap,
)
from analysis.convergence import (
    ExperimentMode,
    ExperimentReport,
    ExperimentSpec,
    ReportRow,
    run_experiment,
    run_experiment_async,
    trend_holds,
    tv_bound,
    tv_convergence_run,
)
