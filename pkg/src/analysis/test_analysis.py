import numpy as np
import pytest

from analysis import (
    BoundReport,
    ExperimentMode,
    ExperimentSpec,
    build_battery,
    default_match_tol,
    delta_structure_check,
    difference_norm_check,
    differing_rows,
    frobenius_norm,
    hyperedge_difference,
    interlacing_check,
    multiplicity_stability_check,
    rows_within,
    run_experiment,
    run_experiment_async,
    schatten1_norm,
    trend_holds,
    tv_bound,
    tv_convergence_run,
    tv_distance,
    weak_star_bound,
    weak_star_gap,
    wielandt_hoffman_check,
)
from analysis import interlacing
from config.config import Config
from families.generators import path_graph, perturb, single_hyperedge, star_graph
from families.spec import FamilyPairSpec, FamilySpec, parse_family
from hypergraph import Hyperedge, make_hypergraph, random_hypergraph
from operators.matrices import Operator, build_operator
from spectra.eigensolver import spectral_measure, symmetric_eigenvalues
from spectra.functions import polynomial
from spectra.measure import SpectralMeasure
from utils.errors import (
    EmptyKeepSet,
    InvalidParameters,
    OrderMismatch,
    RowDifferenceExceedsC,
    UnboundedTestFunction,
    VertexSetMismatch,
)

STAR_WITH_CHORD = FamilySpec(
    kind="perturbed",
    params={"base": {"kind": "star", "params": {}}, "add": [{"inputs": [1], "outputs": [2]}]},
)


def _random_symmetric(order, seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(order, order))
    return a + a.T


def _with_extra_hyperedges(g, seed, count=1, card=3):
    rng = np.random.default_rng(seed)
    added = []
    for _ in range(count):
        members = [int(v) for v in rng.choice(g.n_vertices, size=card, replace=False)]
        added.append((members[:-1], members[-1:]))
    return perturb(g, add=added)


def test_hyperedge_difference():
    g1 = star_graph(4)
    g2 = perturb(g1, add=[([1, 2], [])])
    diff = hyperedge_difference(g1, g2)
    assert (len(diff.shared), diff.c1, diff.c2) == (3, 1, 2)
    assert diff.only_2 == [Hyperedge(inputs=[1, 2])]

    doubled = make_hypergraph(2, [([0, 1], []), ([0, 1], [])])
    single = make_hypergraph(2, [([0, 1], [])])
    diff = hyperedge_difference(doubled, single)
    assert (len(diff.shared), len(diff.only_1), diff.only_2) == (1, 1, [])
    assert diff.to_dict()["c1"] == 1

    with pytest.raises(VertexSetMismatch):
        hyperedge_difference(star_graph(4), star_graph(5))


def test_norms():
    assert schatten1_norm(np.diag([1.0, -2.0])) == pytest.approx(3.0)
    assert frobenius_norm(np.diag([1.0, -2.0])) == pytest.approx(np.sqrt(5.0))


def test_wielandt_hoffman():
    for seed in range(10):
        a = _random_symmetric(8, seed)
        b = a + 0.1 * _random_symmetric(8, seed + 100)
        report = wielandt_hoffman_check(a, b)
        assert report.holds
        assert report.measured <= report.bound + 1e-9
    with pytest.raises(OrderMismatch):
        wielandt_hoffman_check(np.eye(2), np.eye(3))
    assert not BoundReport.compare("x", measured=2.0, bound=1.0).holds


def test_perturbation_bounds_on_random_hypergraphs():
    for seed in range(20):
        g1 = random_hypergraph(8, 6, 4, seed)
        g2 = _with_extra_hyperedges(g1, seed)
        reports = difference_norm_check(g1, g2)
        assert [r.quantity for r in reports] == ["delta_1", "delta_2", "delta_3", "delta_4"]
        assert all(r.holds for r in reports)
        structure = delta_structure_check(g1, g2)
        assert structure["holds"], structure
        for op in (Operator.A, Operator.D, Operator.K, Operator.L):
            assert wielandt_hoffman_check(build_operator(g1, op), build_operator(g2, op)).holds


def test_delta_structure_counts_rows():
    # a cardinality-4 hyperedge changes 12 off-diagonal entries of A but only 4 rows
    g1 = random_hypergraph(6, 4, 3, seed=2)
    g2 = perturb(g1, add=[([0, 1, 2, 3], [])])
    structure = delta_structure_check(g1, g2)
    assert structure["delta_1_nonzeros"] == 12
    assert structure["delta_1_rows"] == 4
    assert (structure["c1"], structure["c2"]) == (1, 4)
    assert structure["holds"]


def test_differing_rows():
    a = np.eye(5)
    assert differing_rows(a, a) == []
    b = a.copy()
    for i in range(3):
        b[i, 3] = b[3, i] = 1.0
    assert differing_rows(a, b) == [3]
    with pytest.raises(OrderMismatch):
        differing_rows(np.eye(2), np.eye(3))


def _greedy_trap():
    # vertex 0 has the most differing entries but the cover {1, 2, 3} is smaller
    pattern = np.zeros((7, 7))
    for i, j in ((0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)):
        pattern[i, j] = pattern[j, i] = 1.0
    return np.eye(7), np.eye(7) + pattern


def test_differing_rows_finds_the_smallest_cover():
    q1, q2 = _greedy_trap()
    assert differing_rows(q1, q2) == [1, 2, 3]
    assert rows_within(q1, q2, 3) == [1, 2, 3]
    assert rows_within(q1, q2, 2) is None
    report = multiplicity_stability_check(q1, q2, c=3)
    assert report.holds and report.rows == [1, 2, 3]
    with pytest.raises(RowDifferenceExceedsC):
        multiplicity_stability_check(q1, q2, c=2)


def test_rows_within_searches_past_the_budget(monkeypatch):
    monkeypatch.setattr(interlacing, "MAX_COVER_SUBSETS", 0)
    q1, q2 = _greedy_trap()
    assert len(differing_rows(q1, q2)) == 4
    assert rows_within(q1, q2, 3) == [1, 2, 3]


def test_interlacing():
    for seed in range(10):
        q = _random_symmetric(9, seed)
        assert interlacing_check(q, keep=range(6)).holds
    # identity plus all-ones: 1 with multiplicity 5 in Q and 3 in P
    report = interlacing_check(np.eye(6) + np.ones((6, 6)), keep=[0, 2, 3, 5])
    assert report.holds and report.c == 2
    with pytest.raises(EmptyKeepSet):
        interlacing_check(np.eye(3), keep=[])
    with pytest.raises(InvalidParameters):
        interlacing_check(np.eye(3), keep=[0, 1, 2])
    with pytest.raises(InvalidParameters):
        interlacing_check(np.eye(3), keep=[0, 4])


def test_multiplicity_stability():
    q1 = np.eye(6) + np.ones((6, 6))
    q2 = q1.copy()
    q2[0, 1] = q2[1, 0] = 5.0
    report = multiplicity_stability_check(q1, q2, c=1)
    assert report.holds and report.rows == [0]
    with pytest.raises(RowDifferenceExceedsC):
        multiplicity_stability_check(q1, q2, c=0)


def test_tv_distance():
    assert tv_distance(SpectralMeasure.dirac(0.0), SpectralMeasure.dirac(1.0)) == pytest.approx(1.0)
    half = SpectralMeasure(atoms=[0.0, 1.0], weights=[0.5, 0.5])
    other = SpectralMeasure(atoms=[0.0, 2.0], weights=[0.5, 0.5])
    assert tv_distance(half, half) == 0.0
    assert tv_distance(half, other) == pytest.approx(0.5)
    assert tv_distance(other, half) == pytest.approx(0.5)
    # atoms closer than the match tolerance count as one
    assert tv_distance(SpectralMeasure.dirac(0.0), SpectralMeasure.dirac(1e-9)) == 0.0
    assert default_match_tol(half, other) == pytest.approx(1e-7)


def test_weak_star_battery():
    mu, nu = SpectralMeasure.dirac(0.0), SpectralMeasure.dirac(2.0)
    battery = build_battery(mu, nu, epsilon=0.1)
    names = [f.name for f in battery]
    assert "hat(0,1)" in names and "hat(2,1)" in names
    assert weak_star_gap(mu, nu, battery) == pytest.approx(1.0)
    assert weak_star_gap(mu, mu, battery) == 0.0
    assert weak_star_bound(battery, n=10, schatten1=1.0) == pytest.approx(2.1)
    assert weak_star_bound(build_battery(mu, nu), n=10, schatten1=1.0) is None
    with pytest.raises(UnboundedTestFunction):
        weak_star_gap(mu, nu, [polynomial(1)])


def test_tv_bound_terms():
    spectrum = symmetric_eigenvalues(build_operator(star_graph(16), Operator.L))
    assert tv_bound(spectrum, c=2, n=16)["bound"] == pytest.approx(12 / 16)
    one_atom = tv_bound(spectrum, c=2, n=16, s=1)
    assert (one_atom["s"], one_atom["k"]) == (1, 2)
    assert one_atom["bound"] == pytest.approx(6 / 16)


def test_experiment_spec_validation():
    star = parse_family("star")
    with pytest.raises(InvalidParameters):
        ExperimentSpec(mode="class", operator="D", sizes=[10, 5], family=star)
    with pytest.raises(InvalidParameters):
        ExperimentSpec(mode="class", operator="D", sizes=[], family=star)
    with pytest.raises(InvalidParameters):
        ExperimentSpec(mode="weak_star", operator="D", sizes=[5], family=star)
    with pytest.raises(InvalidParameters):
        ExperimentSpec(mode="class", operator="D", sizes=[5])
    with pytest.raises(InvalidParameters):
        ExperimentSpec(mode="tv", operator="LH", sizes=[5], pair=FamilyPairSpec(first=star, second=star))
    spec = ExperimentSpec(mode="class", operator="L^H", sizes=[5, 6], family=star)
    assert spec.operator is Operator.LH and spec.mode is ExperimentMode.CLASS


@pytest.mark.asyncio
async def test_class_run_approaches_the_limit():
    spec = ExperimentSpec(
        mode="class", operator="D", sizes=[10, 20, 40, 80], family=parse_family("hyperflower l=2 t=2"), seed=7
    )
    report = await run_experiment_async(spec)
    assert [row.size for row in report.rows] == [10, 20, 40, 80]
    # four peripheral vertices of degree 1 against delta_2
    assert report.values() == pytest.approx([0.4, 0.2, 0.1, 0.05])
    assert trend_holds(report)
    assert report.metadata["seed"] == 7
    assert report.to_csv().splitlines()[0] == "size,value,bound,slack"


def test_divergent_class_reports_dominant_atom():
    spec = ExperimentSpec(mode="class", operator="A", sizes=[5, 6, 7, 8], family=parse_family("r_complete r=3"))
    report = run_experiment(spec)
    assert report.values() == pytest.approx([3.0, 4.0, 5.0, 6.0])
    assert all(row.details["limit"] == "none" for row in report.rows)
    assert not trend_holds(report)


def test_atom_free_class_reports_max_weight():
    spec = ExperimentSpec(mode="class", operator="L", sizes=[8, 16, 32], family=parse_family("cycle"))
    report = run_experiment(spec)
    assert report.values() == pytest.approx([0.25, 0.125, 0.0625])


def test_weak_star_pair_stays_within_bound():
    pair = FamilyPairSpec(first=parse_family("path"), second=parse_family("cycle"))
    spec = ExperimentSpec(mode="weak_star", operator="L", sizes=[10, 20, 40], pair=pair, epsilon=0.1)
    report = run_experiment(spec)
    for row in report.rows:
        assert row.bound is not None
        assert row.value <= row.bound
        assert row.details["schatten1"] > 0.0


def test_tv_run_star_with_chord():
    pair = FamilyPairSpec(first=parse_family("star"), second=STAR_WITH_CHORD)
    report = tv_convergence_run(pair, [16, 32, 64], "L")
    assert [row.details["c"] for row in report.rows] == [2, 2, 2]
    assert [row.bound for row in report.rows] == pytest.approx([12 / 16, 12 / 32, 12 / 64])
    assert trend_holds(report)
    first = report.rows[0]
    assert first.value == pytest.approx(
        tv_distance(
            spectral_measure(build_operator(star_graph(16), Operator.L)),
            spectral_measure(build_operator(perturb(star_graph(16), add=[([1], [2])]), Operator.L)),
        )
    )


def test_tv_distance_vanishes_for_isospectral_pair():
    g = single_hyperedge(5)
    mu = spectral_measure(build_operator(g, Operator.K))
    assert tv_distance(mu, mu) == 0.0


def test_perturbation_bounds_with_several_hyperedges():
    for seed in range(10):
        g1 = random_hypergraph(30, 20, 4, seed)
        g2 = _with_extra_hyperedges(g1, seed, count=3, card=4)
        assert all(r.holds for r in difference_norm_check(g1, g2))
        assert delta_structure_check(g1, g2)["holds"]


def test_stability_on_random_row_changes():
    rng = np.random.default_rng(0)
    for seed in range(20):
        q1 = np.round(_random_symmetric(10, seed))
        q2 = q1.copy()
        rows = rng.choice(10, size=2, replace=False)
        for i in rows:
            changed = np.round(rng.normal(size=10))
            q2[i, :] = changed
            q2[:, i] = changed
        report = multiplicity_stability_check(q1, q2, c=len(differing_rows(q1, q2)))
        assert report.holds, report.violations
        assert interlacing_check(q1, keep=[i for i in range(10) if i not in rows]).holds


def test_tv_disjoint_complete_graphs_against_connected_sum():
    two_cliques = {"kind": "disjoint_union", "params": {"copies": 2, "component": {"kind": "r_complete", "params": {"r": 2}}}}
    joined = {"kind": "perturbed", "params": {"base": two_cliques, "bridges": "sqrt"}}
    pair = FamilyPairSpec(first=FamilySpec.parse_obj(two_cliques), second=FamilySpec.parse_obj(joined))
    for op in ("L", "K", "D", "A"):
        report = tv_convergence_run(pair, [20, 40, 80, 160, 320], op)
        for row in report.rows:
            assert row.value <= row.bound, (op, row)
        assert report.rows[-1].bound < 1.0


def test_tv_does_not_vanish_for_a_split_path():
    # two half paths are the path with its middle edge removed
    halves = FamilySpec(kind="disjoint_union", params={"copies": 2, "component": {"kind": "path", "params": {}}})
    pair = FamilyPairSpec(first=parse_family("path"), second=halves)
    report = tv_convergence_run(pair, [20, 40, 80, 160, 320], "L")
    assert all(value >= 0.2 for value in report.values())
    assert not trend_holds(report)
    n = 20
    split = perturb(path_graph(n), remove=[n // 2 - 1])
    assert report.values()[0] == pytest.approx(
        tv_distance(
            spectral_measure(build_operator(path_graph(n), Operator.L)),
            spectral_measure(build_operator(split, Operator.L)),
        )
    )


def _with_fixed_hyperedge(base):
    perturbed = FamilySpec(kind="perturbed", params={"base": base, "add": [{"inputs": [0, 1, 2]}]})
    return FamilyPairSpec(first=FamilySpec.parse_obj(base), second=perturbed)


@pytest.mark.parametrize("base", [
    {"kind": "hyperflower", "params": {"l": 2, "t": 2}},
    {"kind": "r_complete", "params": {"r": 2}},
])
@pytest.mark.parametrize("op", ["A", "D", "K", "L"])
def test_weak_star_gap_decays_under_a_fixed_hyperedge(base, op):
    pair = _with_fixed_hyperedge(base)
    report = run_experiment(ExperimentSpec(mode="weak_star", operator=op, sizes=[20, 320], pair=pair))
    first, last = report.values()
    assert last <= 0.25 * first, (base["kind"], op, first, last)
    if op == "D":
        # three vertices move up one degree
        assert (first, last) == pytest.approx([3 / 20, 3 / 320])


def test_star_class_at_large_size():
    spec = ExperimentSpec(mode="class", operator="L", sizes=[10, 40, 320], family=parse_family("star"))
    report = run_experiment(spec)
    assert report.values() == pytest.approx([2 / 10, 2 / 40, 2 / 320])
    assert report.values()[-1] <= 0.05


def test_divergent_dominant_atom_doubles(monkeypatch):
    monkeypatch.setattr(Config, "MAX_ENUMERATED_HYPEREDGES", 2000)
    spec = ExperimentSpec(mode="class", operator="D", sizes=[40, 320], family=parse_family("r_complete r=2"))
    first, last = run_experiment(spec).values()
    assert first == pytest.approx(39.0)
    assert last >= 2 * first
