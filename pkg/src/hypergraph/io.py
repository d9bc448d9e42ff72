# Canonical JSON form: {"n": <int>, "hyperedges": [{"inputs": [...], "outputs": [...]}, ...]}

import json
from pathlib import Path
from typing import Union

from pydantic import ValidationError

from hypergraph.model import OrientedHypergraph, make_hypergraph
from utils.errors import ParseFailure


def hypergraph_to_dict(g: OrientedHypergraph) -> dict:
    return {"n": g.n_vertices, "hyperedges": [h.to_dict() for h in g.hyperedges]}


def hypergraph_to_json(g: OrientedHypergraph) -> str:
    return json.dumps(hypergraph_to_dict(g))


def hypergraph_from_dict(data: dict) -> OrientedHypergraph:
    if not isinstance(data, dict) or "n" not in data:
        raise ParseFailure('hypergraph JSON must be an object with keys "n" and "hyperedges"')
    try:
        return make_hypergraph(int(data["n"]), data.get("hyperedges", []))
    except (ValidationError, TypeError, ValueError, AttributeError) as e:
        raise ParseFailure(f"malformed hypergraph: {e}")


def hypergraph_from_json(text: str) -> OrientedHypergraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseFailure(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}")
    return hypergraph_from_dict(data)


def load_hypergraph(path: Union[str, Path]) -> OrientedHypergraph:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseFailure(f"cannot read {path}: {e}")
    return hypergraph_from_json(text)
