# Operator construction: D, I, A, L, L^H, K, K^H of an oriented hypergraph

from enum import Enum
from fractions import Fraction

import numpy as np
from pydantic import BaseModel, validator

from hypergraph.model import OrientedHypergraph, ensure_valid
from utils.errors import BoundViolation, InvalidParameters, NonSymmetricInput
from utils.logger import Logger

logger = Logger.get_logger("operators")


class Operator(str, Enum):
    D = "D"
    A = "A"
    L = "L"
    K = "K"
    LH = "LH"
    KH = "KH"

    @classmethod
    def parse(cls, raw: str) -> "Operator":
        key = str(raw).strip().replace("^", "").upper()
        try:
            return cls(key)
        except ValueError:
            raise InvalidParameters(f"unknown operator {raw!r}; expected one of D, A, L, K, LH, KH")


class SymmetricMatrix(BaseModel):
    name: str
    entries: np.ndarray

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator("entries")
    def _square_and_symmetric(cls, v):
        if v.ndim != 2 or v.shape[0] != v.shape[1]:
            raise NonSymmetricInput(f"expected a square matrix, got shape {v.shape}")
        if not np.array_equal(v, v.T):
            raise NonSymmetricInput("matrix is not exactly symmetric")
        return v

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    @property
    def is_integer(self) -> bool:
        return np.issubdtype(self.entries.dtype, np.integer)

    def as_float(self) -> np.ndarray:
        return np.asarray(self.entries, dtype=float)

    def trace(self):
        if self.is_integer:
            return int(np.trace(self.entries))
        return float(np.trace(self.entries))

    def __sub__(self, other: "SymmetricMatrix") -> "SymmetricMatrix":
        return SymmetricMatrix(name=f"{self.name}-{other.name}", entries=self.entries - other.entries)


class IncidenceMatrix(BaseModel):
    entries: np.ndarray

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]


def degree_matrix(g: OrientedHypergraph) -> SymmetricMatrix:
    ensure_valid(g)
    return SymmetricMatrix(name="D", entries=np.diag(g.degrees()))


def incidence_matrix(g: OrientedHypergraph) -> IncidenceMatrix:
    ensure_valid(g)
    entries = np.zeros((g.n_vertices, g.m), dtype=np.int64)
    for index, h in enumerate(g.hyperedges):
        for v in h.inputs:
            entries[v, index] = 1
        for v in h.outputs:
            entries[v, index] = -1
    return IncidenceMatrix(entries=entries)


def adjacency_matrix(g: OrientedHypergraph) -> SymmetricMatrix:
    """A_ij = #anti-oriented(i, j) - #co-oriented(i, j), counted over the hyperedge multiset."""
    ensure_valid(g)
    a = np.zeros((g.n_vertices, g.n_vertices), dtype=np.int64)
    for h in g.hyperedges:
        inputs = sorted(h.inputs)
        outputs = sorted(h.outputs)
        if inputs and outputs:
            a[np.ix_(inputs, outputs)] += 1
            a[np.ix_(outputs, inputs)] += 1
        for group in (inputs, outputs):
            if len(group) > 1:
                a[np.ix_(group, group)] -= 1
                a[group, group] += 1
    return SymmetricMatrix(name="A", entries=a)


def _inverse_sqrt_degrees(g: OrientedHypergraph) -> np.ndarray:
    return 1.0 / np.sqrt(g.degrees().astype(float))


def normalized_laplacian(g: OrientedHypergraph) -> SymmetricMatrix:
    """L = id - D^{-1/2} A D^{-1/2}."""
    a = adjacency_matrix(g).entries
    d = _inverse_sqrt_degrees(g)
    # outer(d, d) is exactly symmetric, so the elementwise product is too
    scaled = a * np.outer(d, d)
    return SymmetricMatrix(name="L", entries=np.eye(g.n_vertices) - scaled)


def hyperedge_normalized_laplacian(g: OrientedHypergraph) -> SymmetricMatrix:
    """L^H = I^T D^{-1} I, accumulated per degree class so it stays exactly symmetric."""
    inc = incidence_matrix(g).entries
    deg = g.degrees()
    out = np.zeros((g.m, g.m), dtype=float)
    for d in np.unique(deg):
        rows = inc[deg == d]
        out += (rows.T @ rows).astype(float) / float(d)
    return SymmetricMatrix(name="LH", entries=out)


def kirchhoff_laplacian(g: OrientedHypergraph) -> SymmetricMatrix:
    """K = D - A, asserted equal to I I^T entrywise."""
    k = degree_matrix(g).entries - adjacency_matrix(g).entries
    inc = incidence_matrix(g).entries.astype(float)
    # exact in float64 while entries stay below 2**53
    if not np.array_equal(k, inc @ inc.T):
        raise BoundViolation("K = D - A disagrees with I I^T")
    return SymmetricMatrix(name="K", entries=k)


def hyperedge_kirchhoff_laplacian(g: OrientedHypergraph) -> SymmetricMatrix:
    inc = incidence_matrix(g).entries
    return SymmetricMatrix(name="KH", entries=inc.T @ inc)


_BUILDERS = {
    Operator.D: degree_matrix,
    Operator.A: adjacency_matrix,
    Operator.L: normalized_laplacian,
    Operator.K: kirchhoff_laplacian,
    Operator.LH: hyperedge_normalized_laplacian,
    Operator.KH: hyperedge_kirchhoff_laplacian,
}


def build_operator(g: OrientedHypergraph, op) -> SymmetricMatrix:
    op = op if isinstance(op, Operator) else Operator.parse(op)
    logger.debug(f"[OPERATORS] building {op.value} for n={g.n_vertices}, m={g.m}")
    return _BUILDERS[op](g)


def exact_trace(g: OrientedHypergraph, op) -> Fraction:
    """
    Trace in exact rational arithmetic from integer degrees and incidences.

    L = D^{-1/2} I I^T D^{-1/2} and L^H = I^T D^{-1} I, so their diagonals are
    sum_h I_ih^2 / d_i and sum_i I_ih^2 / d_i. A is read off the built matrix.
    """
    op = op if isinstance(op, Operator) else Operator.parse(op)
    ensure_valid(g)
    deg = [int(d) for d in g.degrees()]
    if op is Operator.D:
        return Fraction(sum(deg))
    if op is Operator.A:
        return Fraction(int(np.trace(adjacency_matrix(g).entries)))
    squares = incidence_matrix(g).entries.astype(np.int64) ** 2
    if op in (Operator.K, Operator.KH):
        return Fraction(int(squares.sum()))
    total = Fraction(0)
    for i, d in enumerate(deg):
        for h in range(g.m):
            if squares[i, h]:
                total += Fraction(int(squares[i, h]), d)
    return total
