# Size sweeps over growing families: spectral-class gaps, weak-star gaps and total variation

import asyncio
import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, root_validator, validator

from analysis.distances import (
    MATCH_FACTOR,
    build_battery,
    default_match_tol,
    max_atom_weight,
    tv_distance,
    weak_star_bound,
    weak_star_gap,
)
from analysis.interlacing import differing_rows
from analysis.norms import schatten1_norm
from config.config import Config
from families.oracles import AtomFreeLimit, NoLimit, spectral_class_limit
from families.spec import FamilyPairSpec, FamilySpec, family_operator
from operators.matrices import Operator
from spectra.eigensolver import symmetric_eigenvalues
from spectra.measure import SpectralMeasure, Spectrum
from utils.errors import GenerationFailure, HyperspecError, InvalidParameters
from utils.logger import Logger

logger = Logger.get_logger("analysis")


class ExperimentMode(str, Enum):
    CLASS = "class"
    WEAK_STAR = "weak_star"
    TV = "tv"


class ExperimentSpec(BaseModel):
    """A family (mode class) or a family pair (modes weak_star, tv) swept over sizes."""

    mode: ExperimentMode
    operator: Operator
    sizes: List[int]
    family: Optional[FamilySpec] = None
    pair: Optional[FamilyPairSpec] = None
    epsilon: Optional[float] = None
    seed: Optional[int] = None

    @validator("operator", pre=True)
    def _parse_operator(cls, v):
        return v if isinstance(v, Operator) else Operator.parse(v)

    @validator("sizes")
    def _ascending(cls, v):
        if not v:
            raise InvalidParameters("experiment needs at least one size")
        if any(b <= a for a, b in zip(v, v[1:])):
            raise InvalidParameters(f"sizes must be strictly ascending, got {v}")
        return v

    @root_validator(skip_on_failure=True)
    def _family_matches_mode(cls, values):
        mode = values["mode"]
        if mode is ExperimentMode.CLASS and values.get("family") is None:
            raise InvalidParameters("mode class needs a family")
        if mode is not ExperimentMode.CLASS and values.get("pair") is None:
            raise InvalidParameters(f"mode {mode.value} needs a family pair")
        if mode is ExperimentMode.TV and values["operator"] not in (Operator.A, Operator.D, Operator.K, Operator.L):
            raise InvalidParameters("tv runs support the operators A, D, K and L")
        return values

    def to_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "operator": self.operator.value,
            "sizes": list(self.sizes),
            "family": self.family.to_dict() if self.family else None,
            "pair": self.pair.to_dict() if self.pair else None,
            "epsilon": self.epsilon,
            "seed": self.seed,
        }


class ReportRow(BaseModel):
    size: int
    n: int
    operator: str
    atoms: List[float]
    weights: List[float]
    value: float
    bound: Optional[float] = None
    slack: Optional[float] = None
    dominant_atom: float
    max_weight: float
    tol: float
    details: Dict[str, Any] = Field(default_factory=dict)


class ExperimentReport(BaseModel):
    spec: Dict[str, Any]
    rows: List[ReportRow]
    metadata: Dict[str, Any]

    def values(self) -> List[float]:
        return [row.value for row in self.rows]

    def to_dict(self) -> dict:
        return {"spec": self.spec, "rows": [row.dict() for row in self.rows], "metadata": self.metadata}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["size", "value", "bound", "slack"])
        for row in self.rows:
            writer.writerow([
                row.size,
                repr(row.value),
                "" if row.bound is None else repr(row.bound),
                "" if row.slack is None else repr(row.slack),
            ])
        return buffer.getvalue()


def _operator_at(family: FamilySpec, op: Operator, size: int):
    try:
        return family_operator(family, op, size)
    except GenerationFailure:
        raise
    except HyperspecError as e:
        raise GenerationFailure(f"{family.kind.value} at size {size}: {e}")


def _measure(spectrum: Spectrum) -> SpectralMeasure:
    return SpectralMeasure.from_spectrum(spectrum)


def _row(size: int, n: int, op: Operator, mu: SpectralMeasure, value: float,
         bound: Optional[float] = None, details: Optional[dict] = None) -> ReportRow:
    return ReportRow(
        size=size,
        n=n,
        operator=op.value,
        atoms=list(mu.atoms),
        weights=list(mu.weights),
        value=value,
        bound=bound,
        slack=None if bound is None else bound - value,
        dominant_atom=mu.dominant_atom(),
        max_weight=max_atom_weight(mu),
        tol=mu.tol,
        details=details or {},
    )


def _class_row(spec: ExperimentSpec, limit, size: int) -> ReportRow:
    n, q = _operator_at(spec.family, spec.operator, size)
    mu = _measure(symmetric_eigenvalues(q))
    if isinstance(limit, NoLimit):
        return _row(size, n, spec.operator, mu, mu.dominant_atom(), details={"limit": "none"})
    if isinstance(limit, AtomFreeLimit):
        return _row(size, n, spec.operator, mu, max_atom_weight(mu), details={"limit": "atom_free"})
    battery = build_battery(mu, limit)
    return _row(size, n, spec.operator, mu, weak_star_gap(mu, limit, battery), details={"limit": limit.to_dict()})


def _pair_matrices(spec: ExperimentSpec, size: int):
    n1, q1 = _operator_at(spec.pair.first, spec.operator, size)
    n2, q2 = _operator_at(spec.pair.second, spec.operator, size)
    if n1 != n2:
        raise GenerationFailure(f"pair members at size {size} have {n1} and {n2} vertices")
    return n1, q1, q2


def _weak_star_row(spec: ExperimentSpec, size: int) -> ReportRow:
    n, q1, q2 = _pair_matrices(spec, size)
    mu1 = _measure(symmetric_eigenvalues(q1))
    mu2 = _measure(symmetric_eigenvalues(q2))
    battery = build_battery(mu1, mu2, epsilon=spec.epsilon)
    value = weak_star_gap(mu1, mu2, battery)
    bound = None
    details = {"battery": len(battery)}
    if spec.epsilon is not None:
        norm = schatten1_norm(q1.as_float() - q2.as_float())
        bound = weak_star_bound(battery, n, norm)
        details["schatten1"] = norm
    return _row(size, n, spec.operator, mu1, value, bound=bound, details=details)


def tv_bound(first: Spectrum, c: int, n: int, s: Optional[int] = None, k: Optional[int] = None) -> Dict[str, Any]:
    """
    (k + 2cs)/n. Without s, s is the number of distinct eigenvalues of the first matrix
    and k = 0; with s and no k, k is what the s largest multiplicities leave uncovered.
    """
    if s is None:
        s, k = len(first.clusters), 0
    elif k is None:
        top = sorted((mult for _, mult in first.clusters), reverse=True)[:s]
        k = n - sum(top)
    return {"s": s, "k": k, "c": c, "bound": (k + 2.0 * c * s) / n}


def _tv_row(spec: ExperimentSpec, size: int) -> ReportRow:
    n, q1, q2 = _pair_matrices(spec, size)
    s1 = symmetric_eigenvalues(q1)
    s2 = symmetric_eigenvalues(q2)
    mu1, mu2 = _measure(s1), _measure(s2)
    match_tol = default_match_tol(mu1, mu2)
    value = tv_distance(mu1, mu2, match_tol=match_tol)
    c = len(differing_rows(q1, q2))
    terms = tv_bound(s1, c, n, spec.pair.s, spec.pair.k)
    details = {key: terms[key] for key in ("s", "k", "c")}
    details["match_tol"] = match_tol
    return _row(size, n, spec.operator, mu1, value, bound=terms["bound"], details=details)


def _worker(spec: ExperimentSpec):
    if spec.mode is ExperimentMode.CLASS:
        limit = spectral_class_limit(spec.family, spec.operator)
        return lambda size: _class_row(spec, limit, size)
    if spec.mode is ExperimentMode.WEAK_STAR:
        return lambda size: _weak_star_row(spec, size)
    return lambda size: _tv_row(spec, size)


async def run_experiment_async(spec: ExperimentSpec) -> ExperimentReport:
    """Sizes run concurrently on a thread pool; rows come back in size order."""
    work = _worker(spec)
    loop = asyncio.get_running_loop()
    logger.info(f"[ANALYSIS] {spec.mode.value} run, operator {spec.operator.value}, sizes {spec.sizes}")
    with ThreadPoolExecutor(max_workers=max(1, Config.WORKERS)) as executor:
        rows = await asyncio.gather(*[loop.run_in_executor(executor, work, size) for size in spec.sizes])
    for row in rows:
        logger.debug(f"[ANALYSIS] size={row.size} n={row.n} value={row.value:.6g} bound={row.bound}")
    return ExperimentReport(
        spec=spec.to_dict(),
        rows=list(rows),
        metadata={
            "version": Config.VERSION,
            "seed": spec.seed,
            "eigen_method": Config.EIGEN_METHOD,
            "cluster_tol_override": Config.cluster_tol(),
            "match_factor": MATCH_FACTOR,
        },
    )


def run_experiment(spec: ExperimentSpec) -> ExperimentReport:
    return asyncio.run(run_experiment_async(spec))


def tv_convergence_run(pair: FamilyPairSpec, sizes: List[int], operator) -> ExperimentReport:
    spec = ExperimentSpec(mode=ExperimentMode.TV, operator=operator, sizes=sizes, pair=pair)
    return run_experiment(spec)


def trend_holds(report: ExperimentReport) -> bool:
    """Last value at most half the first, and every value within its bound."""
    values = report.values()
    if not values:
        return False
    within = all(row.bound is None or row.value <= row.bound + 1e-12 for row in report.rows)
    return values[-1] <= 0.5 * values[0] and within
