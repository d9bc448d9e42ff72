# Closed-form spectra and spectral-class limits of the named families

import math
from typing import List, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, Field

from families.generators import hyperflower
from families.spec import (
    HYPERFLOWER_KINDS,
    FamilyKind,
    FamilySpec,
    family_operator,
    growth_value,
)
from operators.matrices import Operator, hyperedge_kirchhoff_laplacian
from spectra.eigensolver import eigenvalues_array
from spectra.measure import SpectralMeasure
from utils.errors import DegenerateSize, UnknownLimit, UnsupportedFamilyOperator
from utils.logger import Logger

logger = Logger.get_logger("families")

# closed-form values this close to zero count as zero eigenvalues
ZERO_CUTOFF = 1e-12


class ClosedFormSpectrum(BaseModel):
    """Eigenvalues as (value, multiplicity) pairs plus residuals solved from trace identities."""

    operator: Operator
    entries: List[Tuple[float, int]]
    residuals: List[float] = Field(default_factory=list)

    @property
    def order(self) -> int:
        return sum(mult for _, mult in self.entries) + len(self.residuals)

    def eigenvalues(self) -> np.ndarray:
        values = [value for value, mult in self.entries for _ in range(mult)]
        return np.sort(np.array(values + list(self.residuals), dtype=float))

    def to_dict(self) -> dict:
        return {
            "operator": self.operator.value,
            "entries": [[value, mult] for value, mult in self.entries],
            "residuals": list(self.residuals),
            "order": self.order,
        }


class NoLimit(BaseModel):
    """The family has no spectral class for this operator: eigenvalue mass escapes to infinity."""

    reason: str


class AtomFreeLimit(BaseModel):
    """A spectral class with no atoms; checked only through max atom weight -> 0."""

    reason: str


Limit = Union[SpectralMeasure, NoLimit, AtomFreeLimit]


def _entries(*pairs) -> List[Tuple[float, int]]:
    return [(float(value), int(mult)) for value, mult in pairs if mult > 0]


def _from_values(values) -> List[Tuple[float, int]]:
    return [(float(v), 1) for v in values]


def _hyperedge_side(vertex_side: List[Tuple[float, int]], m: int) -> List[Tuple[float, int]]:
    """L^H / K^H share the nonzero spectrum of L / K; the rest of the m eigenvalues are 0."""
    nonzero = [(value, mult) for value, mult in vertex_side if abs(value) > ZERO_CUTOFF]
    zeros = m - sum(mult for _, mult in nonzero)
    return _entries((0.0, zeros)) + nonzero


def _single_hyperedge(n: int, op: Operator) -> ClosedFormSpectrum:
    if n < 2:
        raise DegenerateSize(f"single_hyperedge closed forms need n >= 2, got {n}")
    table = {
        Operator.D: _entries((1, n)),
        Operator.L: _entries((0, n - 1), (n, 1)),
        Operator.A: _entries((1 - n, 1), (1, n - 1)),
        Operator.K: _entries((0, n - 1), (n, 1)),
        Operator.LH: _entries((n, 1)),
        Operator.KH: _entries((n, 1)),
    }
    return ClosedFormSpectrum(operator=op, entries=table[op])


def _r_complete(n: int, r: int, op: Operator) -> ClosedFormSpectrum:
    p = math.comb(n - 1, r - 1)
    # pair multiplicity, equal to p * (1 - (n - r) / (n - 1))
    q = math.comb(n - 2, r - 2)
    m = math.comb(n, r)
    lap = _entries(((n - r) / (n - 1), n - 1), (r, 1))
    kirchhoff = _entries((p - q, n - 1), (p * r, 1))
    table = {
        Operator.D: _entries((p, n)),
        Operator.L: lap,
        Operator.A: _entries((p * (1 - r), 1), (q, n - 1)),
        Operator.K: kirchhoff,
    }
    if op is Operator.LH:
        return ClosedFormSpectrum(operator=op, entries=_hyperedge_side(lap, m))
    if op is Operator.KH:
        return ClosedFormSpectrum(operator=op, entries=_hyperedge_side(kirchhoff, m))
    return ClosedFormSpectrum(operator=op, entries=table[op])


def hyperflower_adjacency_residuals(l: int, t: int, core: int) -> Tuple[float, float]:
    """
    The two eigenvalues of A the listed atoms leave open, from trace(A) = 0 and
    trace(A^2) = sum of squared entries. Returned as a <= b.
    """
    listed = _hyperflower_adjacency_listed(l, t, core)
    s1 = sum(value * mult for value, mult in listed)
    s2 = sum(value * value * mult for value, mult in listed)
    total = core * (core - 1) * l * l + 2 * core * t * l + l * t * (t - 1)
    discriminant = max(0.0, 2.0 * (total - s2) - s1 * s1)
    root = math.sqrt(discriminant)
    return (-s1 - root) / 2.0, (-s1 + root) / 2.0


def _hyperflower_adjacency_listed(l: int, t: int, core: int) -> List[Tuple[float, int]]:
    return _entries((l, core - 1), (1, l * (t - 1)), (1 - t, l - 1))


def _hyperflower(l: int, t: int, core: int, op: Operator) -> ClosedFormSpectrum:
    if core < 1:
        raise UnsupportedFamilyOperator("hyperflower closed forms need a nonempty core")
    n = core + t * l
    lap = _entries((0, n - l), (t, l - 1), (n - t * l + t, 1))
    kirchhoff = _entries((0, n - l), (t, l - 1), (n * l - t * l * l + t, 1))
    if op is Operator.D:
        return ClosedFormSpectrum(operator=op, entries=_entries((l, core), (1, t * l)))
    if op is Operator.L:
        return ClosedFormSpectrum(operator=op, entries=lap)
    if op is Operator.K:
        return ClosedFormSpectrum(operator=op, entries=kirchhoff)
    if op is Operator.LH:
        return ClosedFormSpectrum(operator=op, entries=_hyperedge_side(lap, l))
    if op is Operator.KH:
        return ClosedFormSpectrum(operator=op, entries=_hyperedge_side(kirchhoff, l))
    a, b = hyperflower_adjacency_residuals(l, t, core)
    return ClosedFormSpectrum(operator=op, entries=_hyperflower_adjacency_listed(l, t, core), residuals=[a, b])


def _graph(kind: FamilyKind, n: int, op: Operator) -> ClosedFormSpectrum:
    if kind is FamilyKind.CYCLE_GRAPH:
        angles = 2.0 * np.pi * np.arange(n) / n
        m = n
        table = {
            Operator.D: _entries((2, n)),
            Operator.A: _from_values(2.0 * np.cos(angles)),
            Operator.L: _from_values(1.0 - np.cos(angles)),
            Operator.K: _from_values(2.0 - 2.0 * np.cos(angles)),
        }
    elif kind is FamilyKind.PATH_GRAPH:
        m = n - 1
        table = {
            Operator.D: _entries((1, 2), (2, n - 2)),
            Operator.A: _from_values(2.0 * np.cos(np.pi * np.arange(1, n + 1) / (n + 1))),
            Operator.L: _from_values(1.0 - np.cos(np.pi * np.arange(n) / (n - 1))),
            Operator.K: _from_values(2.0 - 2.0 * np.cos(np.pi * np.arange(n) / n)),
        }
    else:
        m = n - 1
        root = math.sqrt(n - 1)
        table = {
            Operator.D: _entries((1, n - 1), (n - 1, 1)),
            Operator.A: _entries((-root, 1), (0, n - 2), (root, 1)),
            Operator.L: _entries((0, 1), (1, n - 2), (2, 1)),
            Operator.K: _entries((0, 1), (1, n - 2), (n, 1)),
        }
    if op is Operator.LH:
        return ClosedFormSpectrum(operator=op, entries=_hyperedge_side(table[Operator.L], m))
    if op is Operator.KH:
        return ClosedFormSpectrum(operator=op, entries=_hyperedge_side(table[Operator.K], m))
    return ClosedFormSpectrum(operator=op, entries=table[op])


def closed_form_spectrum(spec: FamilySpec, op, size: Optional[int] = None) -> ClosedFormSpectrum:
    op = op if isinstance(op, Operator) else Operator.parse(op)
    kind = spec.kind
    if kind is FamilyKind.DISJOINT_UNION:
        copies = spec.int_param("copies", 2)
        component = closed_form_spectrum(spec.component(), op, size // copies if size is not None else None)
        return ClosedFormSpectrum(
            operator=op,
            entries=[(value, mult * copies) for value, mult in component.entries],
            residuals=[value for value in component.residuals for _ in range(copies)],
        )
    if kind is FamilyKind.PERTURBED:
        raise UnsupportedFamilyOperator("perturbed families have no closed-form spectrum")
    params = growth_value(spec, size)
    if kind is FamilyKind.SINGLE_HYPEREDGE:
        return _single_hyperedge(params["n"], op)
    if kind is FamilyKind.R_COMPLETE:
        return _r_complete(params["n"], params["r"], op)
    if kind in HYPERFLOWER_KINDS:
        return _hyperflower(params["l"], params["t"], params["core"], op)
    return _graph(kind, params["n"], op)


class VerificationReport(BaseModel):
    family: dict
    operator: str
    n: int
    order: int
    max_abs_error: float
    tolerance: float
    passed: bool
    residuals_in_range: Optional[bool] = None


def _petal_count(spec: FamilySpec, size: Optional[int]) -> int:
    if spec.kind is FamilyKind.DISJOINT_UNION:
        copies = spec.int_param("copies", 2)
        return _petal_count(spec.component(), size // copies if size is not None else None)
    return growth_value(spec, size)["l"]


def verification_tolerance(frobenius: float) -> float:
    return max(1e-7, 1e-9 * frobenius)


def verify_closed_form(spec: FamilySpec, op, size: Optional[int] = None,
                       method: Optional[str] = None) -> VerificationReport:
    """Numeric spectrum against the closed form, as sorted lists."""
    op = op if isinstance(op, Operator) else Operator.parse(op)
    expected = closed_form_spectrum(spec, op, size)
    n, q = family_operator(spec, op, size)
    numeric = eigenvalues_array(q, method=method)
    if len(numeric) != expected.order:
        raise UnsupportedFamilyOperator(
            f"closed form has order {expected.order} but {op.value} has order {len(numeric)}"
        )
    error = float(np.max(np.abs(numeric - expected.eigenvalues()))) if len(numeric) else 0.0
    tolerance = verification_tolerance(float(np.linalg.norm(q.as_float())))
    in_range = None
    if expected.residuals:
        bound = _petal_count(spec, size) * n
        in_range = all(-bound <= value <= bound for value in expected.residuals)
    report = VerificationReport(
        family=spec.to_dict(),
        operator=op.value,
        n=n,
        order=len(numeric),
        max_abs_error=error,
        tolerance=tolerance,
        passed=error <= tolerance and in_range is not False,
        residuals_in_range=in_range,
    )
    logger.info(f"[FAMILIES] verify {spec.kind.value} {op.value} n={n}: error={error:.3e} passed={report.passed}")
    return report


def kh_hyperflower_discrepancy(l: int, t: int, core: int, method: Optional[str] = None) -> dict:
    """
    Both candidate large K^H atoms of a hyperflower: n - tl^2 + t and nl - tl^2 + t
    (shared with K). Reports which one the numeric spectrum contains.
    """
    n = core + t * l
    g = hyperflower(l, t, core)
    numeric = eigenvalues_array(hyperedge_kirchhoff_laplacian(g), method=method)
    largest = float(numeric[-1])
    printed = float(n - t * l * l + t)
    shared = float(n * l - t * l * l + t)
    return {
        "l": l,
        "t": t,
        "core": core,
        "n": n,
        "numeric_largest": largest,
        "printed_atom": printed,
        "nonzero_spectrum_atom": shared,
        "matches_printed": bool(np.any(np.abs(numeric - printed) <= 1e-8 * max(1.0, abs(printed)))),
        "matches_nonzero_spectrum": abs(largest - shared) <= 1e-8 * max(1.0, abs(shared)),
    }


def _atoms(*pairs) -> SpectralMeasure:
    return SpectralMeasure.from_pairs(pairs)


def spectral_class_limit(spec: FamilySpec, op) -> Limit:
    """The stated limit measure of the growing family, NoLimit for divergent classes."""
    op = op if isinstance(op, Operator) else Operator.parse(op)
    kind = spec.kind
    divergent = NoLimit(reason=f"eigenvalues of {op.value} grow with n along {kind.value}")
    if kind is FamilyKind.SINGLE_HYPEREDGE:
        if op in (Operator.D, Operator.A):
            return SpectralMeasure.dirac(1.0)
        if op in (Operator.L, Operator.K):
            return SpectralMeasure.dirac(0.0)
        return divergent
    if kind is FamilyKind.R_COMPLETE:
        if op is Operator.L:
            return SpectralMeasure.dirac(1.0)
        if op in (Operator.D, Operator.A, Operator.K):
            return divergent
    if kind is FamilyKind.HYPERFLOWER_FIXED_LT:
        l = spec.int_param("l")
        if op in (Operator.D, Operator.A):
            return SpectralMeasure.dirac(float(l))
        if op in (Operator.L, Operator.K):
            return SpectralMeasure.dirac(0.0)
        return divergent
    if kind is FamilyKind.HYPERFLOWER_FIXED_CORE:
        t = spec.int_param("t")
        if op is Operator.D:
            return SpectralMeasure.dirac(1.0)
        if op in (Operator.L, Operator.K):
            return _atoms((0.0, (t - 1) / t), (float(t), 1 / t))
        if op is Operator.A:
            return _atoms((1.0, (t - 1) / t), (float(1 - t), 1 / t))
        return SpectralMeasure.dirac(float(t))
    if kind is FamilyKind.STAR_GRAPH:
        if op in (Operator.D, Operator.L, Operator.K):
            return SpectralMeasure.dirac(1.0)
        if op is Operator.A:
            return SpectralMeasure.dirac(0.0)
    if kind is FamilyKind.CYCLE_GRAPH:
        if op is Operator.D:
            return SpectralMeasure.dirac(2.0)
        if op in (Operator.A, Operator.L, Operator.K):
            return AtomFreeLimit(reason=f"cycle graphs have an atom-free class for {op.value}")
    raise UnknownLimit(f"no stated spectral class for {kind.value} with respect to {op.value}")
