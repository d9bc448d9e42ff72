# Structural predicates and transforms: regularity, bipartiteness, duals, all-inputs variant

from collections import Counter, deque
from typing import Dict, List, Optional, Set, Tuple

from hypergraph.model import Hyperedge, OrientedHypergraph, ensure_valid
from utils.logger import Logger

logger = Logger.get_logger("hypergraph")

Bipartition = Tuple[Set[int], Set[int]]


def is_p_regular(g: OrientedHypergraph) -> Optional[int]:
    deg = g.degrees()
    if len(deg) == 0:
        return None
    p = int(deg[0])
    return p if bool((deg == p).all()) else None


def _parity_constraints(g: OrientedHypergraph) -> Dict[int, List[Tuple[int, int]]]:
    # parity 0: same side, parity 1: opposite sides
    adjacency: Dict[int, List[Tuple[int, int]]] = {v: [] for v in range(g.n_vertices)}

    def link(u: int, v: int, parity: int) -> None:
        adjacency[u].append((v, parity))
        adjacency[v].append((u, parity))

    for h in g.hyperedges:
        inputs = sorted(h.inputs)
        outputs = sorted(h.outputs)
        for group in (inputs, outputs):
            for u, v in zip(group, group[1:]):
                link(u, v, 0)
        if inputs and outputs:
            link(inputs[0], outputs[0], 1)
    return adjacency


def is_bipartite(g: OrientedHypergraph) -> Optional[Bipartition]:
    """
    Return (V1, V2) such that every hyperedge has its inputs on one side and its
    outputs on the other, or None. Either part may be empty.
    """
    ensure_valid(g)
    adjacency = _parity_constraints(g)
    side: Dict[int, int] = {}
    for start in range(g.n_vertices):
        if start in side:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v, parity in adjacency[u]:
                expected = side[u] ^ parity
                if v not in side:
                    side[v] = expected
                    queue.append(v)
                elif side[v] != expected:
                    logger.debug(f"[HYPERGRAPH] parity conflict at vertices {u}, {v}")
                    return None
    v1 = {v for v, s in side.items() if s == 0}
    v2 = {v for v, s in side.items() if s == 1}
    return v1, v2


def is_bipartition(g: OrientedHypergraph, v1: Set[int], v2: Set[int]) -> bool:
    if v1 & v2 or (v1 | v2) != set(range(g.n_vertices)):
        return False
    for h in g.hyperedges:
        forward = h.inputs <= v1 and h.outputs <= v2
        backward = h.inputs <= v2 and h.outputs <= v1
        if not (forward or backward):
            return False
    return True


def dual(g: OrientedHypergraph) -> OrientedHypergraph:
    """Swap the roles of vertices and hyperedges; incidence signs are transposed."""
    ensure_valid(g)
    inputs: List[Set[int]] = [set() for _ in range(g.n_vertices)]
    outputs: List[Set[int]] = [set() for _ in range(g.n_vertices)]
    for index, h in enumerate(g.hyperedges):
        for v in h.inputs:
            inputs[v].add(index)
        for v in h.outputs:
            outputs[v].add(index)
    hyperedges = tuple(
        Hyperedge(inputs=frozenset(inputs[v]), outputs=frozenset(outputs[v]))
        for v in range(g.n_vertices)
    )
    return OrientedHypergraph(n=g.m, hyperedges=hyperedges)


def all_inputs_variant(g: OrientedHypergraph) -> OrientedHypergraph:
    ensure_valid(g)
    hyperedges = tuple(Hyperedge(inputs=h.vertices) for h in g.hyperedges)
    return OrientedHypergraph(n=g.n_vertices, hyperedges=hyperedges, metadata=dict(g.metadata))


def is_simple_graph(g: OrientedHypergraph) -> bool:
    """Every edge has exactly one input and one output and H is a set."""
    for h in g.hyperedges:
        if len(h.inputs) != 1 or len(h.outputs) != 1:
            return False
    undirected = Counter(h.vertices for h in g.hyperedges)
    return all(count == 1 for count in undirected.values())
