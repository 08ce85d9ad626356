"""Planar lattice configurations up to unimodular equivalence.

Saturated planar Chasles configurations are exactly the lattice points of
polygons with one interior lattice point, so they are enumerated as convex
vertex sets in a box and deduplicated by a canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .chasles_core import is_chasles_configuration
from .errors import DegenerateConfiguration, InputError
from .lattice_geometry import (
    LatticeConfiguration,
    UnimodularMap,
    apply_unimodular,
    convex_hull,
    dimension,
    hull_2d,
    lattice_points,
    normalized_volume,
    pick_counts,
)
from .linalg import _xgcd

Point = tuple[int, int]


@dataclass(frozen=True)
class EquivalenceClass:
    canonical: LatticeConfiguration
    invariant_key: tuple
    member: LatticeConfiguration | None = None
    witness: UnimodularMap | None = None  # maps ``canonical`` onto ``member``

    def to_json(self) -> dict:
        vol, interior, boundary, nverts, edges = self.invariant_key
        return {"vertices": [list(v) for v in hull_2d(self.canonical)],
                "points": [list(p) for p in self.canonical],
                "invariants": {"volume": vol, "interior": interior, "boundary": boundary,
                               "vertices": nverts, "edge_lengths": list(edges)}}


def _edge_normalizer(p1: Point, p2: Point) -> tuple[tuple[int, int], tuple[int, int]]:
    """The unique integer matrix with det +-1 sending ``p1`` to ``(1, 0)`` and ``p2`` to ``(a, b)`` with ``0 <= a < b``.

    ``p1`` must be primitive and ``p2`` independent of it.
    """
    p, q = p1
    _, s, t = _xgcd(p, q)
    rows = [[s, t], [-q, p]]
    a = s * p2[0] + t * p2[1]
    b = -q * p2[0] + p * p2[1]
    if b < 0:
        rows[1] = [-x for x in rows[1]]
        b = -b
    k = a // b
    rows[0] = [rows[0][0] - k * rows[1][0], rows[0][1] - k * rows[1][1]]
    return (tuple(rows[0]), tuple(rows[1]))


def _primitive(v: Point) -> Point:
    g = gcd(*v)
    return (v[0] // g, v[1] // g)


def _apply(m, p: Point) -> Point:
    return (m[0][0] * p[0] + m[0][1] * p[1], m[1][0] * p[0] + m[1][1] * p[1])


def _anchor(points: Sequence[Point], interior: Point | None) -> Point:
    return interior if interior is not None else min(points)


def _interior_point(A: LatticeConfiguration) -> Point | None:
    """The interior lattice point of ``conv(A)`` if there is exactly one."""
    P = convex_hull(A)
    inside = [p for p in lattice_points(P) if not P.on_boundary(p)]
    return inside[0] if len(inside) == 1 else None


def _canonical(A: LatticeConfiguration) -> tuple[tuple[Point, ...], UnimodularMap]:
    if dimension(A) != 2 or A.dim_ambient != 2:
        raise DegenerateConfiguration("canonical forms are defined for 2-dimensional planar configurations")
    verts = hull_2d(A)
    interior = _interior_point(A)
    n = len(verts)
    best = None
    for i, v in enumerate(verts):
        for step in (1, -1):
            e1 = _primitive((verts[(i + step) % n][0] - v[0], verts[(i + step) % n][1] - v[1]))
            e2 = _primitive((verts[(i - step) % n][0] - v[0], verts[(i - step) % n][1] - v[1]))
            m = _edge_normalizer(e1, e2)
            image = [_apply(m, p) for p in A]
            o = _apply(m, interior) if interior is not None else min(image)
            image = tuple(sorted((x - o[0], y - o[1]) for x, y in image))
            if best is None or image < best[0]:
                best = (image, m, (-o[0], -o[1]))
    image, m, shift = best
    return image, UnimodularMap(m, shift)


def canonical_form(A) -> LatticeConfiguration:
    """Deterministic representative of the unimodular class of a planar configuration.

    Candidate maps send a pair of primitive edge directions at a vertex to a
    normal form; the image is translated so the unique interior point (or the
    smallest point) is the origin, and the lexicographically smallest sorted
    image wins.
    """
    A = A if isinstance(A, LatticeConfiguration) else LatticeConfiguration.from_points(A)
    return LatticeConfiguration(2, _canonical(A)[0])


def canonical_map(A) -> UnimodularMap:
    """A unimodular map taking ``A`` onto :func:`canonical_form` of ``A``."""
    A = A if isinstance(A, LatticeConfiguration) else LatticeConfiguration.from_points(A)
    return _canonical(A)[1]


def equivalence_witness(A, B) -> UnimodularMap | None:
    """A verified unimodular map sending ``A`` onto ``B``, or ``None`` when inequivalent."""
    A = A if isinstance(A, LatticeConfiguration) else LatticeConfiguration.from_points(A)
    B = B if isinstance(B, LatticeConfiguration) else LatticeConfiguration.from_points(B)
    if len(A) != len(B):
        return None
    ca, ta = _canonical(A)
    cb, tb = _canonical(B)
    if ca != cb:
        return None
    witness = tb.inverse().compose(ta)
    if apply_unimodular(A, witness) != B:
        raise AssertionError("equivalence witness failed verification")
    return witness


def equivalent(A, B) -> bool:
    return equivalence_witness(A, B) is not None


def invariant_key(A) -> tuple:
    A = A if isinstance(A, LatticeConfiguration) else LatticeConfiguration.from_points(A)
    verts = hull_2d(A)
    n = len(verts)
    edges = tuple(sorted(gcd(verts[(i + 1) % n][0] - verts[i][0], verts[(i + 1) % n][1] - verts[i][1])
                         for i in range(n)))
    interior, boundary = pick_counts(A)
    return (normalized_volume(A), interior, boundary, n, edges)


# --- enumeration -------------------------------------------------------------------

def _twice_area(verts: Sequence[Point]) -> int:
    n = len(verts)
    return abs(sum(verts[i][0] * verts[(i + 1) % n][1] - verts[(i + 1) % n][0] * verts[i][1]
                   for i in range(n)))


def _boundary_count(verts: Sequence[Point]) -> int:
    n = len(verts)
    return sum(gcd(verts[(i + 1) % n][0] - verts[i][0], verts[(i + 1) % n][1] - verts[i][1])
               for i in range(n))


def _interior_count(verts: Sequence[Point]) -> int:
    # Pick: 2A = 2I + B - 2
    return (_twice_area(verts) - _boundary_count(verts) + 2) // 2


def one_interior_polygons(search_box: int, max_vertices: int) -> list[tuple[Point, ...]]:
    """Vertex sets in strictly convex position inside ``[0, box]^2`` whose hull has one interior point.

    Depth-first over points in a fixed order.  A branch is cut as soon as the
    chosen points stop being in convex position or their hull has two
    interior points, since adding points preserves both failures.  Every
    polygon is translated to touch the line ``x = 0``, so the first chosen
    point (the smallest) has ``x = 0``.
    """
    grid = [(x, y) for x in range(search_box + 1) for y in range(search_box + 1)]
    out: list[tuple[Point, ...]] = []

    def extend(chosen: list[Point], start: int):
        if len(chosen) >= 3:
            hull = hull_2d(chosen)
            if len(hull) != len(chosen):
                return
            inside = _interior_count(hull)
            if inside > 1:
                return
            if inside == 1:
                out.append(tuple(hull))
        if len(chosen) == max_vertices:
            return
        for j in range(start, len(grid)):
            chosen.append(grid[j])
            extend(chosen, j + 1)
            chosen.pop()

    for i, p in enumerate(grid):
        if p[0] == 0:
            extend([p], i + 1)
    return out


def classify_planar_saturated_chasles(search_box: int = 4, max_vertices: int = 6) -> list[EquivalenceClass]:
    """Unimodular classes of saturated planar Chasles configurations found in ``[0, box]^2``.

    Each class is checked with :func:`is_chasles_configuration` and for
    saturation before it is returned; classes are sorted by invariant key
    and canonical points.
    """
    if search_box < 3 or max_vertices < 6:
        raise InputError("need search_box >= 3 and max_vertices >= 6")
    classes: dict[tuple[Point, ...], EquivalenceClass] = {}
    for verts in one_interior_polygons(search_box, max_vertices):
        A = lattice_points(convex_hull(verts))
        canon, m = _canonical(A)
        if canon in classes:
            continue
        canon_conf = LatticeConfiguration(2, canon)
        report = is_chasles_configuration(canon_conf)
        if not report or not report.saturated or pick_counts(canon_conf)[0] != 1:
            raise AssertionError(f"enumerated polygon {verts} is not saturated Chasles")
        classes[canon] = EquivalenceClass(canon_conf, invariant_key(canon_conf), A, m.inverse())
    return sorted(classes.values(), key=lambda c: (c.invariant_key, c.canonical.points))
