"""JSON formats for polytopes and sequences; all numbers are ``"p/q"`` strings."""
from __future__ import annotations

import json
from pathlib import Path

from .errors import InvalidInput
from .mixedvol import NefSequence
from .polytope import Polytope, hull
from .rational import format_rational


def polytope_to_dict(P: Polytope) -> dict:
    return {"dim": P.dim, "vertices": [[format_rational(c) for c in v] for v in P.vertices]}


def polytope_from_dict(data: dict) -> Polytope:
    if not isinstance(data, dict) or "vertices" not in data or "dim" not in data:
        raise InvalidInput("polytope JSON needs 'dim' and 'vertices'")
    dim = data["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InvalidInput(f"bad dimension {dim!r}")
    verts = data["vertices"]
    if not isinstance(verts, list) or not all(isinstance(v, list) for v in verts):
        raise InvalidInput("'vertices' must be a list of coordinate lists")
    return hull(verts, dim)


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def load_json(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: invalid JSON: {exc}") from exc


def _reject_float(text: str):
    raise InvalidInput(f"floating-point literal {text} is not allowed; use 'p/q'")


def load_polytope(path) -> Polytope:
    return polytope_from_dict(load_json(path))


def load_sequence(path) -> NefSequence:
    return NefSequence.from_dict(load_json(path))


def save_polytope(P: Polytope, path) -> None:
    Path(path).write_text(dumps(polytope_to_dict(P)))


def is_sequence(data: dict) -> bool:
    return isinstance(data, dict) and "s" in data
