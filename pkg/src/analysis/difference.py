from collections import Counter
from typing import List

from pydantic import BaseModel

from hypergraph.model import Hyperedge, OrientedHypergraph, cardinality
from utils.errors import VertexSetMismatch


class HyperedgeDifference(BaseModel):
    """
    g1 = shared + only_1 and g2 = shared + only_2 as multisets of signed hyperedges.

    c1 counts the hyperedges outside the shared part (both sides), c2 is the largest
    cardinality among them.
    """

    shared: List[Hyperedge]
    only_1: List[Hyperedge]
    only_2: List[Hyperedge]
    c1: int
    c2: int

    def to_dict(self) -> dict:
        return {
            "shared": len(self.shared),
            "only_1": [h.to_dict() for h in self.only_1],
            "only_2": [h.to_dict() for h in self.only_2],
            "c1": self.c1,
            "c2": self.c2,
        }


def _take(hyperedges, counts: Counter) -> List[Hyperedge]:
    """Walk hyperedges in their original order, keeping as many of each as counts allows."""
    remaining = Counter(counts)
    taken = []
    for h in hyperedges:
        if remaining[h] > 0:
            taken.append(h)
            remaining[h] -= 1
    return taken


def hyperedge_difference(g1: OrientedHypergraph, g2: OrientedHypergraph) -> HyperedgeDifference:
    if g1.n_vertices != g2.n_vertices:
        raise VertexSetMismatch(f"hypergraphs have {g1.n_vertices} and {g2.n_vertices} vertices")
    counts_1 = Counter(g1.hyperedges)
    counts_2 = Counter(g2.hyperedges)
    shared = _take(g1.hyperedges, counts_1 & counts_2)
    only_1 = _take(g1.hyperedges, counts_1 - counts_2)
    only_2 = _take(g2.hyperedges, counts_2 - counts_1)
    changed = only_1 + only_2
    return HyperedgeDifference(
        shared=shared,
        only_1=only_1,
        only_2=only_2,
        c1=len(changed),
        c2=max((cardinality(h) for h in changed), default=0),
    )
