# Oriented hypergraph data model: hyperedges, validation, degrees and cardinalities

from typing import Any, Dict, FrozenSet, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field

from utils.errors import (
    CatalystVertex,
    EmptyHyperedge,
    IndexOutOfRange,
    IsolatedVertex,
    ValidationFailure,
)
from utils.logger import Logger

logger = Logger.get_logger("hypergraph")


class Hyperedge(BaseModel):
    """A signed hyperedge: inputs carry incidence +1, outputs carry -1."""

    inputs: FrozenSet[int] = frozenset()
    outputs: FrozenSet[int] = frozenset()

    class Config:
        frozen = True

    @property
    def vertices(self) -> FrozenSet[int]:
        return self.inputs | self.outputs

    def sign(self, vertex: int) -> int:
        if vertex in self.inputs:
            return 1
        if vertex in self.outputs:
            return -1
        return 0

    def to_dict(self) -> Dict[str, List[int]]:
        return {"inputs": sorted(self.inputs), "outputs": sorted(self.outputs)}


class OrientedHypergraph(BaseModel):
    """Vertex count plus an ordered multiset of hyperedges (duplicates allowed)."""

    n_vertices: int = Field(..., alias="n", ge=0)
    hyperedges: Tuple[Hyperedge, ...] = ()
    metadata: Dict[str, Any] = Field(default_factory=dict)

    class Config:
        frozen = True
        allow_population_by_field_name = True

    @property
    def n(self) -> int:
        return self.n_vertices

    @property
    def m(self) -> int:
        return len(self.hyperedges)

    def degrees(self) -> np.ndarray:
        """Degree of every in-range vertex, counting duplicate hyperedges."""
        deg = np.zeros(self.n_vertices, dtype=np.int64)
        for h in self.hyperedges:
            for v in h.vertices:
                if 0 <= v < self.n_vertices:
                    deg[v] += 1
        return deg

    def cardinalities(self) -> List[int]:
        return [cardinality(h) for h in self.hyperedges]

    def incidence_count(self) -> int:
        return sum(self.cardinalities())

    def __hash__(self):
        return hash((self.n_vertices, self.hyperedges))

    def __eq__(self, other):
        if not isinstance(other, OrientedHypergraph):
            return NotImplemented
        return self.n_vertices == other.n_vertices and self.hyperedges == other.hyperedges


class ValidationIssue(BaseModel):
    code: str
    message: str
    vertex: Optional[int] = None
    hyperedge: Optional[int] = None


class ValidationResult(BaseModel):
    issues: List[ValidationIssue] = Field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.issues

    def raise_for_issues(self) -> None:
        if self.valid:
            return
        first = self.issues[0]
        error_cls = _ISSUE_ERRORS.get(first.code, ValidationFailure)
        summary = "; ".join(issue.message for issue in self.issues[:5])
        if len(self.issues) > 5:
            summary += f"; ... ({len(self.issues)} issues)"
        raise error_cls(summary, self.issues)


_ISSUE_ERRORS = {
    "IndexOutOfRange": IndexOutOfRange,
    "CatalystVertex": CatalystVertex,
    "EmptyHyperedge": EmptyHyperedge,
    "IsolatedVertex": IsolatedVertex,
}


def cardinality(h: Hyperedge) -> int:
    return len(h.inputs) + len(h.outputs)


def validate(g: OrientedHypergraph) -> ValidationResult:
    """Check every type invariant and report each violation with its vertex/hyperedge index."""
    issues: List[ValidationIssue] = []
    for index, h in enumerate(g.hyperedges):
        if not h.inputs and not h.outputs:
            issues.append(ValidationIssue(
                code="EmptyHyperedge",
                message=f"hyperedge {index} has no vertices",
                hyperedge=index,
            ))
            continue
        for v in sorted(h.vertices):
            if v < 0 or v >= g.n_vertices:
                issues.append(ValidationIssue(
                    code="IndexOutOfRange",
                    message=f"hyperedge {index} references vertex {v} outside [0, {g.n_vertices})",
                    vertex=v,
                    hyperedge=index,
                ))
        for v in sorted(h.inputs & h.outputs):
            issues.append(ValidationIssue(
                code="CatalystVertex",
                message=f"vertex {v} is both input and output of hyperedge {index}",
                vertex=v,
                hyperedge=index,
            ))
    deg = g.degrees()
    for v in np.flatnonzero(deg == 0):
        issues.append(ValidationIssue(
            code="IsolatedVertex",
            message=f"vertex {int(v)} has degree 0",
            vertex=int(v),
        ))
    if issues:
        logger.debug(f"[HYPERGRAPH] validation found {len(issues)} issue(s) on n={g.n_vertices}, m={g.m}")
    return ValidationResult(issues=issues)


def ensure_valid(g: OrientedHypergraph) -> OrientedHypergraph:
    validate(g).raise_for_issues()
    return g


def degree(g: OrientedHypergraph, i: int) -> int:
    if i < 0 or i >= g.n_vertices:
        raise IndexOutOfRange(f"vertex {i} outside [0, {g.n_vertices})")
    return sum(1 for h in g.hyperedges if i in h.inputs or i in h.outputs)


def make_hypergraph(n: int, hyperedges, metadata: Optional[Dict[str, Any]] = None) -> OrientedHypergraph:
    """Build from (inputs, outputs) pairs, dicts or Hyperedge instances."""
    edges = []
    for h in hyperedges:
        if isinstance(h, Hyperedge):
            edges.append(h)
        elif isinstance(h, dict):
            edges.append(Hyperedge(inputs=h.get("inputs", ()), outputs=h.get("outputs", ())))
        else:
            inputs, outputs = h
            edges.append(Hyperedge(inputs=inputs, outputs=outputs))
    return OrientedHypergraph(n=n, hyperedges=tuple(edges), metadata=metadata or {})
