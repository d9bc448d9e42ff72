import numpy as np

from hypergraph.model import Hyperedge, OrientedHypergraph, ensure_valid
from utils.errors import InvalidParameters
from utils.logger import Logger

logger = Logger.get_logger("hypergraph")


def random_hypergraph(n: int, m: int, max_card: int, seed: int) -> OrientedHypergraph:
    """
    Seeded random oriented hypergraph. Cardinalities are uniform in [1, max_card] and
    signs uniform; isolated vertices are repaired by appending singleton hyperedges,
    so the returned m can exceed the requested one (see metadata["repaired"]).
    """
    if n < 1 or m < 1 or not 1 <= max_card <= n:
        raise InvalidParameters(f"need n >= 1, m >= 1, 1 <= max_card <= n; got n={n}, m={m}, max_card={max_card}")
    rng = np.random.default_rng(seed)
    hyperedges = []
    for _ in range(m):
        card = int(rng.integers(1, max_card + 1))
        members = rng.choice(n, size=card, replace=False)
        signs = rng.integers(0, 2, size=card)
        inputs = frozenset(int(v) for v, s in zip(members, signs) if s == 0)
        outputs = frozenset(int(v) for v, s in zip(members, signs) if s == 1)
        hyperedges.append(Hyperedge(inputs=inputs, outputs=outputs))

    covered = set()
    for h in hyperedges:
        covered |= h.vertices
    repaired = [v for v in range(n) if v not in covered]
    for v in repaired:
        hyperedges.append(Hyperedge(inputs=frozenset([v])))
    if repaired:
        logger.debug(f"[HYPERGRAPH] seed={seed}: repaired {len(repaired)} isolated vertices")

    g = OrientedHypergraph(
        n=n,
        hyperedges=tuple(hyperedges),
        metadata={"seed": seed, "requested_m": m, "max_card": max_card, "repaired": repaired},
    )
    return ensure_valid(g)


def random_simple_graph(n: int, edge_probability: float, seed: int) -> OrientedHypergraph:
    """Seeded simple graph (one input, one output per edge); isolated vertices get a path edge."""
    if n < 2:
        raise InvalidParameters(f"need n >= 2, got {n}")
    rng = np.random.default_rng(seed)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_probability:
                edges.append((i, j))
    present = {v for e in edges for v in e}
    existing = set(edges)
    for v in range(n):
        if v in present:
            continue
        u = v + 1 if v + 1 < n else v - 1
        pair = (min(u, v), max(u, v))
        if pair not in existing:
            edges.append(pair)
            existing.add(pair)
        present.update(pair)
    hyperedges = tuple(Hyperedge(inputs=frozenset([i]), outputs=frozenset([j])) for i, j in edges)
    return ensure_valid(OrientedHypergraph(n=n, hyperedges=hyperedges, metadata={"seed": seed}))
