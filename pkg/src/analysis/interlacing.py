# Cauchy interlacing and the multiplicity inequalities that follow from it

import itertools
import math
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, Field

from operators.matrices import SymmetricMatrix
from spectra.eigensolver import symmetric_eigenvalues
from spectra.measure import Spectrum, default_tolerance
from utils.errors import EmptyKeepSet, InvalidParameters, OrderMismatch, RowDifferenceExceedsC
from utils.logger import Logger

logger = Logger.get_logger("analysis")

MatrixLike = Union[SymmetricMatrix, np.ndarray]

# multiplicities are counted within this many clustering tolerances of an atom
MATCH_FACTOR = 10.0
# row sets examined before differing_rows settles for the greedy cover
MAX_COVER_SUBSETS = 200_000


def _array(q: MatrixLike) -> np.ndarray:
    return q.as_float() if isinstance(q, SymmetricMatrix) else np.asarray(q, dtype=float)


def count_near(spectrum: Spectrum, value: float, window: float) -> int:
    return int(sum(1 for x in spectrum.eigenvalues if abs(x - value) <= window))


def _differing_pairs(a1: np.ndarray, a2: np.ndarray) -> List[Tuple[int, int]]:
    if a1.shape != a2.shape:
        raise OrderMismatch(f"orders differ: {a1.shape[0]} and {a2.shape[0]}")
    rows, cols = np.nonzero(np.triu(a1 != a2))
    return [(int(i), int(j)) for i, j in zip(rows, cols)]


def _greedy_cover(pairs: List[Tuple[int, int]], order: int) -> List[int]:
    pending = np.zeros((order, order), dtype=bool)
    for i, j in pairs:
        pending[i, j] = pending[j, i] = True
    rows = []
    while pending.any():
        i = int(np.argmax(pending.sum(axis=1)))
        rows.append(i)
        pending[i, :] = False
        pending[:, i] = False
    return sorted(rows)


def _smallest_cover(pairs: List[Tuple[int, int]], upto: int,
                    budget: Optional[int] = MAX_COVER_SUBSETS) -> Optional[List[int]]:
    """Smallest row set of size <= upto meeting every differing pair; None if none exists or the budget runs out."""
    # a changed diagonal entry forces its row
    forced = {i for i, j in pairs if i == j}
    rest = [(i, j) for i, j in pairs if i not in forced and j not in forced]
    candidates = sorted({v for pair in rest for v in pair})
    for size in range(0, upto - len(forced) + 1):
        count = math.comb(len(candidates), size)
        if budget is not None:
            if count > budget:
                return None
            budget -= count
        for extra in itertools.combinations(candidates, size):
            chosen = set(extra)
            if all(i in chosen or j in chosen for i, j in rest):
                return sorted(forced | chosen)
    return None


def differing_rows(q1: MatrixLike, q2: MatrixLike) -> List[int]:
    """
    Rows (with their columns) whose removal leaves identical principal submatrices.
    The smallest such set (lexicographically first among equals) when the search fits in
    MAX_COVER_SUBSETS candidate sets; otherwise the greedy cover, largest remaining count first.
    """
    a1, a2 = _array(q1), _array(q2)
    pairs = _differing_pairs(a1, a2)
    greedy = _greedy_cover(pairs, a1.shape[0])
    if len(greedy) <= 1:
        return greedy
    smaller = _smallest_cover(pairs, len(greedy) - 1)
    return smaller if smaller is not None else greedy


def rows_within(q1: MatrixLike, q2: MatrixLike, c: int) -> Optional[List[int]]:
    """A row set of size <= c whose removal makes q1 and q2 agree, searched exhaustively; None if there is none."""
    a1, a2 = _array(q1), _array(q2)
    rows = differing_rows(a1, a2)
    if len(rows) <= c:
        return rows
    return _smallest_cover(_differing_pairs(a1, a2), c, budget=None)


class InterlacingReport(BaseModel):
    order: int
    kept: int
    c: int
    tol: float
    violations: List[str] = Field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations


def interlacing_check(q: MatrixLike, keep: Sequence[int]) -> InterlacingReport:
    """
    P = q restricted to keep. Checks lambda_k(q) <= lambda_k(P) <= lambda_{k+c}(q) and,
    for every clustered eigenvalue of either matrix, M(P) >= M(q) - c and M(q) >= M(P) - c.
    """
    a = _array(q)
    order = a.shape[0]
    keep = sorted(set(int(i) for i in keep))
    if not keep:
        raise EmptyKeepSet("keep set is empty")
    if keep[0] < 0 or keep[-1] >= order:
        raise InvalidParameters(f"keep indices must lie in [0, {order})")
    c = order - len(keep)
    if c < 1:
        raise InvalidParameters("keep set must drop at least one row")
    tol = max(1e-8, default_tolerance(a))
    window = MATCH_FACTOR * tol
    full = symmetric_eigenvalues(a, tol=tol)
    sub = symmetric_eigenvalues(a[np.ix_(keep, keep)], tol=tol)
    violations = []
    q_values, p_values = full.eigenvalues, sub.eigenvalues
    for k, value in enumerate(p_values):
        if value < q_values[k] - tol or value > q_values[k + c] + tol:
            violations.append(
                f"lambda_{k + 1}(P) = {value!r} outside [{q_values[k]!r}, {q_values[k + c]!r}]"
            )
    for atom, _ in full.clusters + sub.clusters:
        m_q, m_p = count_near(full, atom, window), count_near(sub, atom, window)
        if m_p < m_q - c or m_q < m_p - c:
            violations.append(f"multiplicities at {atom!r}: M(Q) = {m_q}, M(P) = {m_p}, c = {c}")
    if violations:
        logger.warning(f"[ANALYSIS] interlacing: {len(violations)} violation(s) at order {order}, c={c}")
    return InterlacingReport(order=order, kept=len(keep), c=c, tol=tol, violations=violations)


class StabilityReport(BaseModel):
    order: int
    c: int
    rows: List[int]
    checked: int
    violations: List[str] = Field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations


def multiplicity_stability_check(q1: MatrixLike, q2: MatrixLike, c: int) -> StabilityReport:
    """M_lambda(q1) >= M_lambda(q2) - 2c for every clustered eigenvalue of q2."""
    a1, a2 = _array(q1), _array(q2)
    rows = rows_within(a1, a2, c)
    if rows is None:
        raise RowDifferenceExceedsC(f"no set of c = {c} rows covers the differing entries")
    tol = max(1e-8, default_tolerance(a1), default_tolerance(a2))
    window = MATCH_FACTOR * tol
    s1 = symmetric_eigenvalues(a1, tol=tol)
    s2 = symmetric_eigenvalues(a2, tol=tol)
    violations = []
    for atom, _ in s2.clusters:
        m1, m2 = count_near(s1, atom, window), count_near(s2, atom, window)
        if m1 < m2 - 2 * c:
            violations.append(f"multiplicities at {atom!r}: M(Q1) = {m1}, M(Q2) = {m2}, c = {c}")
    return StabilityReport(order=a1.shape[0], c=c, rows=rows, checked=len(s2.clusters), violations=violations)
