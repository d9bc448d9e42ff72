# FamilySpec / FamilyPairSpec: declarative growing families and their builders

import json
import math
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, Field, validator

from config.config import Config
from families.generators import (
    bridge_hyperedges,
    cycle_graph,
    disjoint_union,
    hyperflower,
    path_graph,
    perturb,
    r_complete,
    r_complete_operator,
    resolve_bridges,
    single_hyperedge,
    star_graph,
)
from hypergraph.model import OrientedHypergraph
from operators.matrices import Operator, SymmetricMatrix, build_operator
from utils.errors import HyperspecError, InvalidParameters, ParseFailure
from utils.logger import Logger

logger = Logger.get_logger("families")


class FamilyKind(str, Enum):
    SINGLE_HYPEREDGE = "single_hyperedge"
    R_COMPLETE = "r_complete"
    HYPERFLOWER_FIXED_LT = "hyperflower_fixed_lt"
    HYPERFLOWER_FIXED_CORE = "hyperflower_fixed_core"
    CYCLE_GRAPH = "cycle_graph"
    PATH_GRAPH = "path_graph"
    STAR_GRAPH = "star_graph"
    DISJOINT_UNION = "disjoint_union"
    PERTURBED = "perturbed"


KIND_ALIASES = {
    "hyperflower": FamilyKind.HYPERFLOWER_FIXED_LT,
    "complete": FamilyKind.R_COMPLETE,
    "cycle": FamilyKind.CYCLE_GRAPH,
    "path": FamilyKind.PATH_GRAPH,
    "star": FamilyKind.STAR_GRAPH,
}

HYPERFLOWER_KINDS = (FamilyKind.HYPERFLOWER_FIXED_LT, FamilyKind.HYPERFLOWER_FIXED_CORE)


class FamilySpec(BaseModel):
    kind: FamilyKind
    params: Dict[str, Any] = Field(default_factory=dict)

    @validator("kind", pre=True)
    def _resolve_alias(cls, v):
        if isinstance(v, str) and v in KIND_ALIASES:
            return KIND_ALIASES[v]
        return v

    class Config:
        frozen = True

    def __hash__(self):
        return hash((self.kind, json.dumps(self.params, sort_keys=True, default=str)))

    def param(self, name: str, default: Any = None) -> Any:
        return self.params.get(name, default)

    def int_param(self, name: str, default: Optional[int] = None) -> int:
        value = self.params.get(name, default)
        if value is None:
            raise InvalidParameters(f"family {self.kind.value} needs parameter {name!r}")
        try:
            return int(value)
        except (TypeError, ValueError):
            raise InvalidParameters(f"parameter {name!r} of {self.kind.value} must be an integer, got {value!r}")

    def component(self, key: str = "component") -> "FamilySpec":
        raw = self.params.get(key)
        if raw is None:
            raise InvalidParameters(f"family {self.kind.value} needs a nested {key!r} spec")
        return raw if isinstance(raw, FamilySpec) else FamilySpec.parse_obj(raw)

    def to_dict(self) -> dict:
        params = {}
        for key, value in self.params.items():
            params[key] = value.to_dict() if isinstance(value, FamilySpec) else value
        return {"kind": self.kind.value, "params": params}


class FamilyPairSpec(BaseModel):
    """Two families compared size by size; s and k feed the (k + 2cs)/n bound when known."""

    first: FamilySpec
    second: FamilySpec
    s: Optional[int] = None
    k: Optional[int] = None

    def to_dict(self) -> dict:
        return {"first": self.first.to_dict(), "second": self.second.to_dict(), "s": self.s, "k": self.k}


def _coerce(raw: str) -> Any:
    try:
        return int(raw)
    except ValueError:
        pass
    try:
        return float(raw)
    except ValueError:
        return raw


def parse_family(text: str) -> FamilySpec:
    """
    Accepts the JSON form {"kind": ..., "params": {...}} or the flag form
    "hyperflower l=5 t=3 core=2".
    """
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseFailure(f"invalid family JSON at line {e.lineno} column {e.colno}: {e.msg}")
        return family_from_dict(data)
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ParseFailure("empty family description")
    kind, params = tokens[0], {}
    for token in tokens[1:]:
        if "=" not in token:
            raise ParseFailure(f"expected key=value in family description, got {token!r}")
        key, value = token.split("=", 1)
        params[key.strip()] = _coerce(value.strip())
    return family_from_dict({"kind": kind, "params": params})


def family_from_dict(data: dict) -> FamilySpec:
    if not isinstance(data, dict) or "kind" not in data:
        raise ParseFailure('family spec must be an object with a "kind" key')
    try:
        return FamilySpec.parse_obj({"kind": data["kind"], "params": data.get("params", {})})
    except HyperspecError:
        raise
    except Exception as e:
        raise ParseFailure(f"malformed family spec: {e}")


def growth_value(spec: FamilySpec, size: Optional[int]) -> Dict[str, int]:
    """Concrete integer parameters of spec at the given size (or its own parameters)."""
    kind = spec.kind
    if kind in (FamilyKind.SINGLE_HYPEREDGE, FamilyKind.CYCLE_GRAPH, FamilyKind.PATH_GRAPH, FamilyKind.STAR_GRAPH):
        return {"n": size if size is not None else spec.int_param("n")}
    if kind is FamilyKind.R_COMPLETE:
        return {"n": size if size is not None else spec.int_param("n"), "r": spec.int_param("r")}
    if kind is FamilyKind.HYPERFLOWER_FIXED_LT:
        l, t = spec.int_param("l"), spec.int_param("t")
        if size is not None:
            core = size - t * l
        elif "core" in spec.params:
            core = spec.int_param("core")
        else:
            core = spec.int_param("n") - t * l
        return {"l": l, "t": t, "core": core}
    if kind is FamilyKind.HYPERFLOWER_FIXED_CORE:
        t, core = spec.int_param("t"), spec.int_param("core")
        l = (size - core) // t if size is not None else spec.int_param("l")
        return {"l": l, "t": t, "core": core}
    raise InvalidParameters(f"family {kind.value} has no flat parameter set")


def build(spec: FamilySpec, size: Optional[int] = None) -> OrientedHypergraph:
    """Realise the family member; size overrides the growing parameter."""
    kind = spec.kind
    if kind is FamilyKind.DISJOINT_UNION:
        copies = spec.int_param("copies", 2)
        component = spec.component()
        component_size = size // copies if size is not None else None
        return disjoint_union([build(component, component_size) for _ in range(copies)])
    if kind is FamilyKind.PERTURBED:
        base = build(spec.component("base"), size)
        add = list(spec.param("add", []))
        bridges = resolve_bridges(spec.param("bridges"), base.n_vertices)
        if bridges:
            parts = spec.int_param("parts", 2)
            add.extend(bridge_hyperedges(base.n_vertices, bridges, signs=spec.param("signs", "inputs"), parts=parts))
        return perturb(base, add=add, remove=spec.param("remove", []))
    params = growth_value(spec, size)
    if kind is FamilyKind.SINGLE_HYPEREDGE:
        return single_hyperedge(params["n"])
    if kind is FamilyKind.R_COMPLETE:
        return r_complete(params["n"], params["r"])
    if kind in HYPERFLOWER_KINDS:
        return hyperflower(params["l"], params["t"], params["core"])
    if kind is FamilyKind.CYCLE_GRAPH:
        return cycle_graph(params["n"])
    if kind is FamilyKind.PATH_GRAPH:
        return path_graph(params["n"])
    return star_graph(params["n"])


def _enumerable(spec: FamilySpec, size: Optional[int]) -> bool:
    if spec.kind is not FamilyKind.R_COMPLETE:
        return True
    params = growth_value(spec, size)
    return math.comb(params["n"], params["r"]) <= Config.MAX_ENUMERATED_HYPEREDGES


def family_operator(spec: FamilySpec, op, size: Optional[int] = None) -> Tuple[int, SymmetricMatrix]:
    """(n, operator matrix) of the family member; large r-complete members skip enumeration."""
    op = op if isinstance(op, Operator) else Operator.parse(op)
    if not _enumerable(spec, size):
        params = growth_value(spec, size)
        logger.debug(f"[FAMILIES] r_complete({params['n']}, {params['r']}) {op.value} from pair counts")
        return params["n"], r_complete_operator(params["n"], params["r"], op)
    g = build(spec, size)
    return g.n_vertices, build_operator(g, op)
