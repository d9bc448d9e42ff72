# Command logic for the hyperspec CLI. Every function returns plain data; main.py prints it.

import json
from pathlib import Path
from typing import List, Optional, Union

import numpy as np

from analysis.convergence import ExperimentReport, ExperimentSpec, run_experiment
from analysis.difference import hyperedge_difference
from analysis.norms import delta_structure_check, difference_norm_check, wielandt_hoffman_check
from families.oracles import kh_hyperflower_discrepancy, verify_closed_form
from families.spec import HYPERFLOWER_KINDS, FamilySpec, build, family_operator, growth_value, parse_family
from hypergraph.io import hypergraph_to_json, load_hypergraph
from hypergraph.model import OrientedHypergraph
from hypergraph.structure import is_simple_graph
from operators.identities import (
    check_all_inputs_reflection,
    check_interval_bounds,
    check_multiplicity_relations,
    operator_spectra,
)
from operators.matrices import Operator, build_operator, exact_trace
from spectra.eigensolver import symmetric_eigenvalues
from utils.errors import InvalidParameters, ParseFailure
from utils.logger import Logger

logger = Logger.get_logger("cli")

Source = Union[OrientedHypergraph, FamilySpec]


def parse_sizes(text: str) -> List[int]:
    """"a:b:step" (inclusive) or "20,40,80"."""
    text = str(text).strip()
    try:
        if ":" in text:
            parts = [int(p) for p in text.split(":")]
            if len(parts) == 2:
                parts.append(1)
            start, stop, step = parts
            if step <= 0:
                raise InvalidParameters(f"size step must be positive, got {step}")
            return list(range(start, stop + 1, step))
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise ParseFailure(f"cannot parse sizes {text!r}; use a:b:step or a comma list")


def resolve_source(input_path: Optional[str], family: Optional[str]) -> Source:
    if input_path and family:
        raise InvalidParameters("give either --input or --family, not both")
    if input_path:
        return load_hypergraph(input_path)
    if family:
        return parse_family(family)
    raise InvalidParameters("one of --input or --family is required")


def _matrix(source: Source, op: Operator, size: Optional[int]):
    if isinstance(source, OrientedHypergraph):
        return source.n_vertices, build_operator(source, op)
    return family_operator(source, op, size)


def _hypergraph(source: Source, size: Optional[int]) -> OrientedHypergraph:
    return source if isinstance(source, OrientedHypergraph) else build(source, size)


def spectrum_command(source: Source, operator, size: Optional[int] = None, check: bool = False) -> dict:
    op = Operator.parse(operator) if not isinstance(operator, Operator) else operator
    n, q = _matrix(source, op, size)
    spectrum = symmetric_eigenvalues(q)
    logger.info(f"[CLI] spectrum of {op.value}: n={n}, order={spectrum.order}, {len(spectrum.clusters)} clusters")
    result = {"operator": op.value, "n": n, "spectrum": spectrum.to_dict()}
    if check:
        g = _hypergraph(source, size)
        spectra = operator_spectra(g)
        relations = check_multiplicity_relations(g, spectra)
        result["checks"] = {
            "interval_violations": check_interval_bounds(g, spectra),
            "multiplicity_relations": dict(relations.dict(), holds=relations.holds),
            "trace": {
                "exact": str(exact_trace(g, op)),
                "numeric": float(np.sum(spectrum.eigenvalues)),
            },
        }
        if is_simple_graph(g):
            result["checks"]["all_inputs_reflection"] = check_all_inputs_reflection(g)
    return result


def verify_command(family: FamilySpec, operator, size: Optional[int] = None) -> dict:
    op = Operator.parse(operator) if not isinstance(operator, Operator) else operator
    report = verify_closed_form(family, op, size)
    result = report.dict()
    if family.kind in HYPERFLOWER_KINDS and op is Operator.KH:
        params = growth_value(family, size)
        result["kh_discrepancy"] = kh_hyperflower_discrepancy(params["l"], params["t"], params["core"])
    return result


def load_experiment(path: str) -> ExperimentSpec:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as e:
        raise ParseFailure(f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise ParseFailure(f"invalid experiment JSON at line {e.lineno} column {e.colno}: {e.msg}")
    return experiment_from_dict(data)


def experiment_from_dict(data: dict) -> ExperimentSpec:
    if not isinstance(data, dict):
        raise ParseFailure("experiment JSON must be an object")
    data = dict(data)
    if isinstance(data.get("sizes"), str):
        data["sizes"] = parse_sizes(data["sizes"])
    try:
        return ExperimentSpec.parse_obj(data)
    except ValueError as e:
        raise ParseFailure(f"malformed experiment: {e}")


def converge_command(spec: ExperimentSpec) -> ExperimentReport:
    return run_experiment(spec)


def bounds_command(g1: OrientedHypergraph, g2: OrientedHypergraph) -> dict:
    """Delta norms against their bounds plus a Wielandt-Hoffman check per operator."""
    difference = hyperedge_difference(g1, g2)
    deltas = difference_norm_check(g1, g2, strict=False)
    wielandt_hoffman = {}
    for op in (Operator.A, Operator.D, Operator.K, Operator.L):
        report = wielandt_hoffman_check(build_operator(g1, op), build_operator(g2, op), strict=False)
        wielandt_hoffman[op.value] = report.dict()
    structure = delta_structure_check(g1, g2)
    holds = all(r.holds for r in deltas) and all(r["holds"] for r in wielandt_hoffman.values())
    return {
        "n": g1.n_vertices,
        "difference": difference.to_dict(),
        "deltas": [r.dict() for r in deltas],
        "wielandt_hoffman": wielandt_hoffman,
        "structure": structure,
        "holds": holds and structure["holds"],
    }


def gen_command(family: FamilySpec, size: Optional[int] = None) -> str:
    return hypergraph_to_json(build(family, size))
