import itertools
import math

import numpy as np
import pytest

from hypergraph import (
    Hyperedge,
    all_inputs_variant,
    cardinality,
    degree,
    dual,
    hypergraph_from_json,
    hypergraph_to_json,
    is_bipartite,
    is_bipartition,
    is_p_regular,
    is_simple_graph,
    make_hypergraph,
    random_hypergraph,
    random_simple_graph,
    validate,
)
from operators.matrices import Operator, build_operator
from utils.errors import CatalystVertex, IndexOutOfRange, InvalidParameters, IsolatedVertex, ParseFailure

# h1 = {0,1 -> 3,4}, h2 = {1,2 -> 4,5}
BIPARTITE_PAIR = make_hypergraph(6, [([0, 1], [3, 4]), ([1, 2], [4, 5])])


def _exhaustive_bipartite(g):
    for sides in itertools.product((0, 1), repeat=g.n_vertices):
        v1 = {v for v, s in enumerate(sides) if s == 0}
        v2 = {v for v, s in enumerate(sides) if s == 1}
        if is_bipartition(g, v1, v2):
            return True
    return False


def test_validate_examples():
    assert validate(make_hypergraph(2, [([0, 1], [])])).valid

    catalyst = make_hypergraph(1, [Hyperedge(inputs=[0], outputs=[0])])
    result = validate(catalyst)
    assert [issue.code for issue in result.issues] == ["CatalystVertex"]
    with pytest.raises(CatalystVertex):
        result.raise_for_issues()

    isolated = validate(make_hypergraph(3, [([0, 1], [])]))
    assert isolated.issues[0].code == "IsolatedVertex"
    assert isolated.issues[0].vertex == 2
    with pytest.raises(IsolatedVertex):
        isolated.raise_for_issues()


def test_validate_reports_every_issue():
    g = make_hypergraph(3, [([0, 5], []), ([], [])])
    codes = [issue.code for issue in validate(g).issues]
    assert codes == ["IndexOutOfRange", "EmptyHyperedge", "IsolatedVertex", "IsolatedVertex"]
    with pytest.raises(IndexOutOfRange):
        validate(g).raise_for_issues()


def test_degree_and_cardinality():
    g = make_hypergraph(5, [(list(range(5)), [])])
    assert [degree(g, i) for i in range(5)] == [1] * 5

    duplicated = make_hypergraph(2, [([0, 1], []), ([0, 1], [])])
    assert degree(duplicated, 0) == 2

    assert cardinality(Hyperedge(inputs=[0, 1], outputs=[2])) == 3
    assert cardinality(Hyperedge(inputs=[0])) == 1
    with pytest.raises(IndexOutOfRange):
        degree(g, 5)


def test_degree_sum_equals_cardinality_sum():
    for seed in range(20):
        g = random_hypergraph(7, 5, 4, seed)
        assert int(g.degrees().sum()) == sum(g.cardinalities())


def test_p_regular():
    complete = make_hypergraph(5, [(c, []) for c in itertools.combinations(range(5), 3)])
    assert is_p_regular(complete) == math.comb(4, 2)
    cycle = make_hypergraph(4, [([i], [(i + 1) % 4]) for i in range(4)])
    assert is_p_regular(cycle) == 2
    flower = make_hypergraph(5, [([0, 1, 2], []), ([0, 3, 4], [])])
    assert is_p_regular(flower) is None


def test_bipartite_examples():
    v1, v2 = is_bipartite(BIPARTITE_PAIR)
    assert (v1, v2) in (({0, 1, 2}, {3, 4, 5}), ({3, 4, 5}, {0, 1, 2}))

    # an all-inputs hyperedge puts everything on one side; the other side may stay empty
    v1, v2 = is_bipartite(make_hypergraph(2, [([0, 1], [])]))
    assert v1 | v2 == {0, 1} and not (v1 and v2)

    v1, v2 = is_bipartite(make_hypergraph(2, [([0], [1])]))
    assert {frozenset(v1), frozenset(v2)} == {frozenset({0}), frozenset({1})}

    triangle = make_hypergraph(3, [([0], [1]), ([1], [2]), ([0], [2])])
    assert is_bipartite(triangle) is None


def test_bipartite_matches_exhaustive_search():
    for seed in range(40):
        g = random_hypergraph(6, 4, 3, seed)
        witness = is_bipartite(g)
        assert (witness is not None) == _exhaustive_bipartite(g)
        if witness is not None:
            assert is_bipartition(g, *witness)


def test_bipartite_is_isospectral_to_all_inputs_variant():
    plus = all_inputs_variant(BIPARTITE_PAIR)
    for op in Operator:
        ours = np.linalg.eigvalsh(build_operator(BIPARTITE_PAIR, op).as_float())
        theirs = np.linalg.eigvalsh(build_operator(plus, op).as_float())
        assert np.allclose(ours, theirs, atol=1e-9)


def _random_bipartite(n, m, seed):
    rng = np.random.default_rng(seed)
    side = rng.integers(0, 2, size=n)
    hyperedges = []
    for _ in range(m):
        members = [int(v) for v in rng.choice(n, size=int(rng.integers(1, 5)), replace=False)]
        first = [v for v in members if side[v] == 0]
        second = [v for v in members if side[v] == 1]
        hyperedges.append((first, second) if rng.random() < 0.5 else (second, first))
    covered = {v for inputs, outputs in hyperedges for v in inputs + outputs}
    hyperedges.extend(([v], []) for v in range(n) if v not in covered)
    return make_hypergraph(n, hyperedges)


def test_random_bipartite_hypergraphs_are_isospectral_to_all_inputs_variant():
    for seed in range(30):
        g = _random_bipartite(8, 6, seed)
        assert is_bipartite(g) is not None
        plus = all_inputs_variant(g)
        for op in Operator:
            ours = np.linalg.eigvalsh(build_operator(g, op).as_float())
            theirs = np.linalg.eigvalsh(build_operator(plus, op).as_float())
            assert np.allclose(ours, theirs, atol=1e-9), (seed, op)


def test_dual():
    g = make_hypergraph(2, [([0, 1], [])])
    d = dual(g)
    assert d.n_vertices == 1
    assert list(d.hyperedges) == [Hyperedge(inputs=[0]), Hyperedge(inputs=[0])]

    for seed in range(20):
        g = random_hypergraph(6, 5, 4, seed)
        d = dual(g)
        assert d.incidence_count() == g.incidence_count()
        assert list(d.degrees()) == g.cardinalities()
        assert dual(d) == g


def test_dual_kirchhoff_is_hyperedge_kirchhoff():
    complete = make_hypergraph(4, [(c, []) for c in itertools.combinations(range(4), 2)])
    kh = build_operator(complete, Operator.KH).entries
    assert np.array_equal(build_operator(dual(complete), Operator.K).entries, kh)


def test_all_inputs_variant_of_simple_graphs():
    assert all_inputs_variant(make_hypergraph(2, [([0], [1])])).hyperedges == (Hyperedge(inputs=[0, 1]),)
    for seed in range(10):
        g = random_simple_graph(7, 0.4, seed)
        plus = all_inputs_variant(g)
        a = np.linalg.eigvalsh(build_operator(g, Operator.A).as_float())
        a_plus = np.linalg.eigvalsh(build_operator(plus, Operator.A).as_float())
        assert np.allclose(np.sort(-a), a_plus, atol=1e-9)
        lap = np.linalg.eigvalsh(build_operator(g, Operator.L).as_float())
        lap_plus = np.linalg.eigvalsh(build_operator(plus, Operator.L).as_float())
        assert np.allclose(np.sort(2.0 - lap), lap_plus, atol=1e-9)


def test_random_hypergraph():
    assert random_hypergraph(6, 4, 3, seed=1) == random_hypergraph(6, 4, 3, seed=1)
    assert validate(random_hypergraph(6, 4, 3, seed=1)).valid
    for seed in range(100):
        g = random_hypergraph(5, 3, 5, seed)
        assert validate(g).valid
        assert g.m == 3 + len(g.metadata["repaired"])
        assert all(1 <= c <= 5 for c in g.cardinalities()[:3])
    with pytest.raises(InvalidParameters):
        random_hypergraph(3, 2, 4, seed=0)


def test_json_form():
    text = hypergraph_to_json(BIPARTITE_PAIR)
    assert text == (
        '{"n": 6, "hyperedges": [{"inputs": [0, 1], "outputs": [3, 4]}, '
        '{"inputs": [1, 2], "outputs": [4, 5]}]}'
    )
    assert hypergraph_from_json(text) == BIPARTITE_PAIR
    with pytest.raises(ParseFailure):
        hypergraph_from_json('{"n": 2, "hyperedges": [')
    with pytest.raises(ParseFailure):
        hypergraph_from_json('{"hyperedges": []}')


def test_is_simple_graph():
    assert is_simple_graph(random_simple_graph(9, 0.3, seed=2))
    assert is_simple_graph(make_hypergraph(3, [([0], [1]), ([2], [1])]))
    # both orientations of one edge make H a multiset
    assert not is_simple_graph(make_hypergraph(2, [([0], [1]), ([1], [0])]))
    assert not is_simple_graph(make_hypergraph(3, [([0, 1], [2])]))
    assert not is_simple_graph(all_inputs_variant(make_hypergraph(2, [([0], [1])])))
