"""JSON input and output for configurations, structures, points and polynomials.

Rationals always travel as ``"p/q"`` strings so nothing is rounded.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from typing import Any

from .chasles_core import ChaslesStructure
from .errors import ParseError
from .lattice_geometry import LatticeConfiguration, LatticePolytope
from .polynomials import fraction_to_str, parse_fraction


def load_json(source: str) -> Any:
    """Parse a JSON file (``"-"`` reads stdin); syntax errors report line and column."""
    try:
        text = sys.stdin.read() if source == "-" else open(source, encoding="utf-8").read()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from exc
    return loads(text, source)


def loads(text: str, source: str = "<string>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def dumps(data: Any) -> str:
    """Canonical text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _require(cond: bool, message: str):
    if not cond:
        raise ParseError(message)


def config_from_json(data: Any) -> LatticeConfiguration:
    _require(isinstance(data, dict), "configuration must be an object with 'd' and 'points'")
    d, points = data.get("d"), data.get("points")
    _require(isinstance(d, int) and not isinstance(d, bool) and d >= 1, "'d' must be a positive integer")
    _require(isinstance(points, list) and points, "'points' must be a non-empty list")
    for p in points:
        _require(isinstance(p, list) and len(p) == d
                 and all(isinstance(a, int) and not isinstance(a, bool) for a in p),
                 f"point {p!r} is not a list of {d} integers")
    return LatticeConfiguration(d, [tuple(p) for p in points])


def config_to_json(A: LatticeConfiguration) -> dict:
    return {"d": A.dim_ambient, "points": [list(p) for p in A]}


def polytope_to_json(P: LatticePolytope) -> dict:
    return {"d": P.dim_ambient, "dimension": P.dimension,
            "vertices": [list(v) for v in P.vertices],
            "facets": [{"normal": list(n), "offset": c} for n, c in P.facets]}


def structure_from_json(data: Any) -> ChaslesStructure:
    """A structure object, or a bare configuration (partition ``(d,)``).

    Structure objects look like ``{"configurations": [config, ...], "partition": [k, ...]}``.
    """
    _require(isinstance(data, dict), "structure must be a JSON object")
    if "configurations" not in data:
        return ChaslesStructure.from_configuration(config_from_json(data))
    confs = data["configurations"]
    partition = data.get("partition")
    _require(isinstance(confs, list) and confs, "'configurations' must be a non-empty list")
    _require(isinstance(partition, list) and len(partition) == len(confs)
             and all(isinstance(k, int) for k in partition),
             "'partition' must list one integer per configuration")
    return ChaslesStructure(tuple(config_from_json(c) for c in confs), tuple(partition))


def structure_to_json(S: ChaslesStructure) -> dict:
    return {"configurations": [config_to_json(A) for A in S.configurations],
            "partition": list(S.partition)}


def points_from_json(data: Any) -> list[tuple[Fraction, ...]]:
    _require(isinstance(data, list) and data, "'points' must be a non-empty list")
    out = []
    for p in data:
        _require(isinstance(p, list) and p, f"point {p!r} must be a list of rationals")
        try:
            out.append(tuple(parse_fraction(c) for c in p))
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise ParseError(f"bad coordinate in {p!r}: {exc}") from exc
    _require(len({len(p) for p in out}) == 1, "points have different lengths")
    return out


def points_to_json(points) -> list[list[str]]:
    return [[fraction_to_str(c) for c in p] for p in points]
