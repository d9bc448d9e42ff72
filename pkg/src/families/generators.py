# Deterministic generators for the named hypergraph families and their perturbations

import math
from itertools import combinations
from typing import List, Optional, Sequence

import numpy as np

from config.config import Config
from hypergraph.model import Hyperedge, OrientedHypergraph, ensure_valid
from operators.matrices import Operator, SymmetricMatrix
from utils.errors import EmptyList, InvalidParameters, UnsupportedFamilyOperator
from utils.logger import Logger

logger = Logger.get_logger("families")


def _graph_edge(u: int, v: int) -> Hyperedge:
    return Hyperedge(inputs=frozenset([u]), outputs=frozenset([v]))


def single_hyperedge(n: int) -> OrientedHypergraph:
    if n < 1:
        raise InvalidParameters(f"single_hyperedge needs n >= 1, got {n}")
    h = Hyperedge(inputs=frozenset(range(n)))
    return OrientedHypergraph(n=n, hyperedges=(h,), metadata={"family": "single_hyperedge", "n": n})


def r_complete(n: int, r: int) -> OrientedHypergraph:
    """All C(n, r) all-inputs hyperedges of cardinality r, in lexicographic order."""
    if not 2 <= r <= n:
        raise InvalidParameters(f"r_complete needs 2 <= r <= n, got n={n}, r={r}")
    count = math.comb(n, r)
    if count > Config.MAX_ENUMERATED_HYPEREDGES:
        raise InvalidParameters(
            f"r_complete({n}, {r}) has {count} hyperedges, above HYPERSPEC_MAX_ENUMERATED_HYPEREDGES="
            f"{Config.MAX_ENUMERATED_HYPEREDGES}; use r_complete_operator for D, A, L, K"
        )
    hyperedges = tuple(Hyperedge(inputs=frozenset(c)) for c in combinations(range(n), r))
    return OrientedHypergraph(n=n, hyperedges=hyperedges, metadata={"family": "r_complete", "n": n, "r": r})


def r_complete_operator(n: int, r: int, op) -> SymmetricMatrix:
    """
    D, A, L or K of the r-complete hypergraph from its pair counts: every vertex has
    degree C(n-1, r-1) and every pair of vertices shares C(n-2, r-2) hyperedges.
    """
    op = op if isinstance(op, Operator) else Operator.parse(op)
    if not 2 <= r <= n:
        raise InvalidParameters(f"r_complete needs 2 <= r <= n, got n={n}, r={r}")
    p = math.comb(n - 1, r - 1)
    q = math.comb(n - 2, r - 2)
    identity = np.eye(n, dtype=np.int64)
    # all-inputs: every pair is co-oriented in each shared hyperedge
    off_diagonal = np.ones((n, n), dtype=np.int64) - identity
    if op is Operator.D:
        entries = p * identity
    elif op is Operator.A:
        entries = -q * off_diagonal
    elif op is Operator.K:
        entries = p * identity + q * off_diagonal
    elif op is Operator.L:
        entries = np.eye(n) + (q / p) * off_diagonal
    else:
        raise UnsupportedFamilyOperator(f"{op.value} of r_complete is {math.comb(n, r)}-dimensional; enumerate instead")
    return SymmetricMatrix(name=op.value, entries=entries)


def hyperflower(l: int, t: int, core: int) -> OrientedHypergraph:
    """
    Vertices 0..core-1 form the core; hyperedge j holds the core plus its own twin
    group core + j*t .. core + (j+1)*t - 1. All incidences are inputs.
    """
    n = core + t * l
    if l < 1 or t < 1 or core < 0 or n < 2:
        raise InvalidParameters(f"hyperflower needs l >= 1, t >= 1, core >= 0, n >= 2; got l={l}, t={t}, core={core}")
    core_vertices = frozenset(range(core))
    hyperedges = tuple(
        Hyperedge(inputs=core_vertices | frozenset(range(core + j * t, core + (j + 1) * t)))
        for j in range(l)
    )
    return OrientedHypergraph(
        n=n,
        hyperedges=hyperedges,
        metadata={"family": "hyperflower", "l": l, "t": t, "core": core},
    )


def cycle_graph(n: int) -> OrientedHypergraph:
    if n < 3:
        raise InvalidParameters(f"cycle_graph needs n >= 3, got {n}")
    edges = tuple(_graph_edge(i, (i + 1) % n) for i in range(n))
    return OrientedHypergraph(n=n, hyperedges=edges, metadata={"family": "cycle_graph", "n": n})


def path_graph(n: int) -> OrientedHypergraph:
    if n < 2:
        raise InvalidParameters(f"path_graph needs n >= 2, got {n}")
    edges = tuple(_graph_edge(i, i + 1) for i in range(n - 1))
    return OrientedHypergraph(n=n, hyperedges=edges, metadata={"family": "path_graph", "n": n})


def star_graph(n: int) -> OrientedHypergraph:
    """Vertex 0 is the center; n - 1 leaves."""
    if n < 2:
        raise InvalidParameters(f"star_graph needs n >= 2, got {n}")
    edges = tuple(_graph_edge(0, leaf) for leaf in range(1, n))
    return OrientedHypergraph(n=n, hyperedges=edges, metadata={"family": "star_graph", "n": n})


def _shifted(h: Hyperedge, offset: int) -> Hyperedge:
    return Hyperedge(
        inputs=frozenset(v + offset for v in h.inputs),
        outputs=frozenset(v + offset for v in h.outputs),
    )


def disjoint_union(gs: Sequence[OrientedHypergraph]) -> OrientedHypergraph:
    if not gs:
        raise EmptyList("disjoint_union needs at least one hypergraph")
    offset = 0
    hyperedges: List[Hyperedge] = []
    for g in gs:
        hyperedges.extend(_shifted(h, offset) for h in g.hyperedges)
        offset += g.n_vertices
    return OrientedHypergraph(n=offset, hyperedges=tuple(hyperedges), metadata={"components": len(gs)})


def perturb(g: OrientedHypergraph, add: Sequence = (), remove: Sequence[int] = ()) -> OrientedHypergraph:
    """Drop the hyperedges at the given indices and append the new ones; the result must validate."""
    removed = set()
    for index in remove:
        if not 0 <= index < g.m:
            raise InvalidParameters(f"cannot remove hyperedge {index}: only {g.m} hyperedges")
        removed.add(index)
    kept = [h for index, h in enumerate(g.hyperedges) if index not in removed]
    for h in add:
        if isinstance(h, Hyperedge):
            kept.append(h)
        elif isinstance(h, dict):
            kept.append(Hyperedge(inputs=h.get("inputs", ()), outputs=h.get("outputs", ())))
        else:
            inputs, outputs = h
            kept.append(Hyperedge(inputs=inputs, outputs=outputs))
    metadata = dict(g.metadata)
    metadata.update({"added": len(add), "removed": sorted(removed)})
    return ensure_valid(OrientedHypergraph(n=g.n_vertices, hyperedges=tuple(kept), metadata=metadata))


def bridge_hyperedges(n: int, count: int, signs: str = "inputs", parts: int = 2) -> List[Hyperedge]:
    """
    count cardinality-2 hyperedges joining vertex i of each block to vertex i of the next
    block, for blocks of n // parts vertices. signs="graph" gives one input and one output.
    """
    if signs not in ("inputs", "graph"):
        raise InvalidParameters(f'bridge signs must be "inputs" or "graph", got {signs!r}')
    block = n // parts
    if parts < 2 or count < 0 or count > block:
        raise InvalidParameters(f"need parts >= 2 and 0 <= bridges <= {block}, got parts={parts}, bridges={count}")
    edges = []
    for j in range(parts - 1):
        for i in range(count):
            u, v = j * block + i, (j + 1) * block + i
            if signs == "graph":
                edges.append(_graph_edge(u, v))
            else:
                edges.append(Hyperedge(inputs=frozenset([u, v])))
    return edges


def connected_sum(gs: Sequence[OrientedHypergraph], bridges: int, signs: str = "inputs") -> OrientedHypergraph:
    """Copies side by side, consecutive copies joined by `bridges` edges."""
    if not gs:
        raise EmptyList("connected_sum needs at least one hypergraph")
    sizes = {g.n_vertices for g in gs}
    if len(sizes) != 1:
        raise InvalidParameters(f"connected_sum needs equal-size copies, got sizes {sorted(sizes)}")
    union = disjoint_union(gs)
    if len(gs) == 1:
        return union
    edges = bridge_hyperedges(union.n_vertices, bridges, signs=signs, parts=len(gs))
    logger.debug(f"[FAMILIES] connected sum of {len(gs)} copies with {len(edges)} bridge edges")
    return perturb(union, add=edges)


def sqrt_bridges(n: int) -> int:
    return int(math.ceil(math.sqrt(n)))


def resolve_bridges(raw, n: int) -> Optional[int]:
    if raw is None:
        return None
    if raw == "sqrt":
        return sqrt_bridges(n)
    try:
        return int(raw)
    except (TypeError, ValueError):
        raise InvalidParameters(f'bridges must be an integer or "sqrt", got {raw!r}')
