"""File formats: polytope and direction JSON, report serialization.

All numeric payloads are exact rational strings ("p/q" or "n", lowest
terms); CSV output for plot sampling may additionally carry clearly-labeled
float renderings.
"""

from __future__ import annotations

import json
import os

from .errors import DimensionMismatch, ParseError
from .polytope import Polytope, convex_hull
from .rational import parse_rat, rat_str

FORMAT_VERSION = 1


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(str(exc), locus=str(path)) from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}", locus=str(path)) from exc


def _parse_coord(x, locus):
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"coordinates must be exact rational strings or integers, got {x!r}", locus=locus)
    if isinstance(x, int):
        return parse_rat(str(x))
    if isinstance(x, str):
        try:
            return parse_rat(x)
        except ValueError as exc:
            raise ParseError(str(exc), locus=locus) from exc
    raise ParseError(f"bad coordinate {x!r}", locus=locus)


def _parse_vectors(data, key, dim, path):
    rows = data.get(key)
    if not isinstance(rows, list) or not rows:
        raise ParseError(f'"{key}" must be a nonempty list', locus=str(path))
    out = []
    for idx, row in enumerate(rows):
        locus = f"{path}:{key}[{idx}]"
        if not isinstance(row, list) or len(row) != dim:
            raise ParseError(f"expected {dim} coordinates", locus=locus)
        out.append(tuple(_parse_coord(c, locus) for c in row))
    return out


def parse_polytope(path) -> Polytope:
    """Read {"dim": n, "vertices": [["p/q", ...], ...]} and canonicalize."""
    data = _load_json(path)
    dim = data.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise ParseError('"dim" must be a positive integer', locus=str(path))
    return convex_hull(_parse_vectors(data, "vertices", dim, path))


def polytope_to_dict(P: Polytope) -> dict:
    return {"dim": P.ambient_dim, "vertices": [[rat_str(c) for c in v] for v in P.vertices]}


def emit_polytope(P: Polytope, path) -> None:
    with open(path, "w") as fh:
        json.dump(polytope_to_dict(P), fh, indent=1)
        fh.write("\n")


def parse_directions(path, expect_dim=None):
    """Read {"dim": n, "directions": [[...], ...]}; vectors must be nonzero."""
    data = _load_json(path)
    dim = data.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise ParseError('"dim" must be a positive integer', locus=str(path))
    if expect_dim is not None and dim != expect_dim:
        raise DimensionMismatch(f"direction file has dim {dim}, body has dim {expect_dim}")
    dirs = _parse_vectors(data, "directions", dim, path)
    for idx, u in enumerate(dirs):
        if all(c == 0 for c in u):
            raise ParseError("zero direction", locus=f"{path}:directions[{idx}]")
    return dirs


def emit_directions(dirs, dim, path) -> None:
    with open(path, "w") as fh:
        json.dump({"dim": dim, "directions": [[rat_str(c) for c in u] for u in dirs]}, fh, indent=1)
        fh.write("\n")


def default_seed() -> int:
    env = os.environ.get("MINKVAL_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ParseError(f"MINKVAL_SEED must be an integer, got {env!r}") from exc
    return 0


def default_extra_dirs() -> int:
    env = os.environ.get("MINKVAL_DIRS")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ParseError(f"MINKVAL_DIRS must be an integer, got {env!r}") from exc
    return 32
