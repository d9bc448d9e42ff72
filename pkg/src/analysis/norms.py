# Schatten-1 / Frobenius norms and the perturbation bounds built on them

import math
from typing import Dict, List, Union

import numpy as np
from pydantic import BaseModel

from analysis.difference import hyperedge_difference
from hypergraph.model import OrientedHypergraph
from operators.matrices import Operator, SymmetricMatrix, build_operator
from spectra.eigensolver import eigenvalues_array
from utils.errors import BoundViolation, OrderMismatch
from utils.logger import Logger

logger = Logger.get_logger("analysis")

BOUND_SLACK = 1e-8

MatrixLike = Union[SymmetricMatrix, np.ndarray]


def _array(q: MatrixLike) -> np.ndarray:
    return q.as_float() if isinstance(q, SymmetricMatrix) else np.asarray(q, dtype=float)


def schatten1_norm(q: MatrixLike) -> float:
    """Sum of absolute eigenvalues."""
    return float(np.sum(np.abs(eigenvalues_array(q))))


def frobenius_norm(q: MatrixLike) -> float:
    return float(np.sqrt(np.sum(_array(q) ** 2)))


class BoundReport(BaseModel):
    quantity: str
    measured: float
    bound: float
    slack: float
    holds: bool

    @classmethod
    def compare(cls, quantity: str, measured: float, bound: float, scale: float = 1.0) -> "BoundReport":
        slack = bound - measured
        return cls(
            quantity=quantity,
            measured=measured,
            bound=bound,
            slack=slack,
            holds=slack >= -BOUND_SLACK * max(1.0, scale),
        )


def _raise_if_violated(reports: List[BoundReport]) -> None:
    failed = [r for r in reports if not r.holds]
    if failed:
        detail = "; ".join(f"{r.quantity}: {r.measured!r} > {r.bound!r}" for r in failed)
        raise BoundViolation(detail)


def wielandt_hoffman_check(q1: MatrixLike, q2: MatrixLike, strict: bool = True) -> BoundReport:
    """sum_i |lambda_i(q1) - lambda_i(q2)| against ||q1 - q2||_S1, both spectra ascending."""
    a1, a2 = _array(q1), _array(q2)
    if a1.shape != a2.shape:
        raise OrderMismatch(f"orders differ: {a1.shape[0]} and {a2.shape[0]}")
    measured = float(np.sum(np.abs(eigenvalues_array(a1) - eigenvalues_array(a2))))
    bound = schatten1_norm(a1 - a2)
    report = BoundReport.compare("wielandt_hoffman", measured, bound, scale=frobenius_norm(a1) + frobenius_norm(a2))
    if strict:
        _raise_if_violated([report])
    return report


_DELTAS = (
    ("delta_1", Operator.A),
    ("delta_2", Operator.D),
    ("delta_3", Operator.K),
    ("delta_4", Operator.L),
)


def _deltas(g1: OrientedHypergraph, g2: OrientedHypergraph) -> Dict[str, np.ndarray]:
    return {name: build_operator(g1, op).as_float() - build_operator(g2, op).as_float() for name, op in _DELTAS}


def difference_norm_check(g1: OrientedHypergraph, g2: OrientedHypergraph, strict: bool = True) -> List[BoundReport]:
    """
    Schatten-1 norms of A1 - A2, D1 - D2 and K1 - K2 against 3 c1^2 c2, and of
    L1 - L2 against 2 sqrt(2n) c1 c2.
    """
    diff = hyperedge_difference(g1, g2)
    deltas = _deltas(g1, g2)
    n = g1.n_vertices
    integer_bound = 3.0 * diff.c1 ** 2 * diff.c2
    laplacian_bound = 2.0 * math.sqrt(2.0 * n) * diff.c1 * diff.c2
    reports = []
    for name, op in _DELTAS:
        bound = laplacian_bound if op is Operator.L else integer_bound
        reports.append(BoundReport.compare(name, schatten1_norm(deltas[name]), bound))
    logger.debug(f"[ANALYSIS] difference norms n={n} c1={diff.c1} c2={diff.c2}: " +
                 ", ".join(f"{r.quantity}={r.measured:.4g}/{r.bound:.4g}" for r in reports))
    if strict:
        _raise_if_violated(reports)
    return reports


def _nonzero_rows(delta: np.ndarray) -> int:
    return int(np.count_nonzero(np.any(delta != 0, axis=1)))


def delta_structure_check(g1: OrientedHypergraph, g2: OrientedHypergraph) -> Dict[str, object]:
    """
    Exact structure of the operator differences: D1 - D2 is diagonal with at most
    c1 c2 nonzero entries; A1 - A2 has zero diagonal; A1 - A2 and K1 - K2 touch at
    most c1 c2 rows; all three have entries bounded by c1; |(L1 - L2)_ij| <= 2.
    """
    diff = hyperedge_difference(g1, g2)
    c1, c2 = diff.c1, diff.c2
    deltas = _deltas(g1, g2)
    d1, d2, d3, d4 = (deltas[name] for name, _ in _DELTAS)
    checks = {
        "delta_2_diagonal": bool(np.count_nonzero(d2 - np.diag(np.diagonal(d2))) == 0),
        "delta_2_nonzeros": int(np.count_nonzero(d2)),
        "delta_1_zero_diagonal": bool(np.count_nonzero(np.diagonal(d1)) == 0),
        "delta_1_rows": _nonzero_rows(d1),
        "delta_1_nonzeros": int(np.count_nonzero(d1)),
        "delta_3_rows": _nonzero_rows(d3),
        "max_abs_integer_entry": float(max(np.max(np.abs(d), initial=0.0) for d in (d1, d2, d3))),
        "max_abs_delta_4": float(np.max(np.abs(d4), initial=0.0)),
        "c1": c1,
        "c2": c2,
    }
    checks["holds"] = bool(
        checks["delta_2_diagonal"]
        and checks["delta_2_nonzeros"] <= c1 * c2
        and checks["delta_1_zero_diagonal"]
        and checks["delta_1_rows"] <= c1 * c2
        and checks["delta_3_rows"] <= c1 * c2
        and checks["max_abs_integer_entry"] <= c1
        and checks["max_abs_delta_4"] <= 2.0 + 1e-12
    )
    return checks
