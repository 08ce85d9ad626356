"""Exact polyhedral primitives for lattice configurations.

A configuration is a finite set of integer points; its polytope is the convex
hull.  Everything is computed with integers and ``Fraction`` only.

Hulls: monotone chain in the plane, a placing triangulation in higher
dimension (its boundary simplices give the facets).  Volumes are normalized so
the unit simplex has volume 1.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Iterable, Sequence

from .errors import DegenerateHull, DimensionMismatch, InputError
from .linalg import (
    bareiss_determinant,
    integer_inverse,
    matvec,
    normal_vector,
    primitive,
    rank,
)

Point = tuple[int, ...]


@dataclass(frozen=True)
class LatticeConfiguration:
    """A finite, duplicate-free set of points of ``Z^d``; stored sorted."""

    dim_ambient: int
    points: tuple[Point, ...]

    def __post_init__(self):
        if self.dim_ambient < 1:
            raise InputError("ambient dimension must be positive")
        pts = tuple(tuple(int(c) for c in p) for p in self.points)
        if not pts:
            raise InputError("a configuration needs at least one point")
        for p in pts:
            if len(p) != self.dim_ambient:
                raise DimensionMismatch(f"point {p} does not have length {self.dim_ambient}")
        if len(set(pts)) != len(pts):
            raise InputError("duplicate points in configuration")
        object.__setattr__(self, "points", tuple(sorted(pts)))

    @classmethod
    def from_points(cls, points: Iterable[Sequence[int]]) -> "LatticeConfiguration":
        pts = [tuple(int(c) for c in p) for p in points]
        if not pts:
            raise InputError("a configuration needs at least one point")
        return cls(len(pts[0]), tuple(dict.fromkeys(pts)))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in set(self.points)

    def as_set(self) -> frozenset[Point]:
        return frozenset(self.points)

    def translate(self, t: Sequence[int]) -> "LatticeConfiguration":
        return LatticeConfiguration(self.dim_ambient,
                                    tuple(tuple(a + b for a, b in zip(p, t)) for p in self.points))


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of a configuration.

    ``facets`` holds ``(inner_normal, offset)`` pairs with ``normal . x >= offset``
    on the polytope.  For lower-dimensional hulls ``degenerate`` is set,
    ``equations`` pins down the affine span (``normal . x == offset``) and
    ``facets`` holds inequalities that are valid inside that span only.
    """

    dim_ambient: int
    vertices: tuple[Point, ...]
    facets: tuple[tuple[Point, int], ...]
    dimension: int
    equations: tuple[tuple[Point, int], ...] = ()

    @property
    def degenerate(self) -> bool:
        return self.dimension < self.dim_ambient

    def contains(self, x: Sequence[int]) -> bool:
        for n, c in self.equations:
            if _dot(n, x) != c:
                return False
        return all(_dot(n, x) >= c for n, c in self.facets)

    def on_boundary(self, x: Sequence[int]) -> bool:
        return self.contains(x) and any(_dot(n, x) == c for n, c in self.facets)


@dataclass(frozen=True)
class UnimodularMap:
    """Integer affine map ``x -> matrix @ x + translation`` with ``det(matrix) = +-1``."""

    matrix: tuple[tuple[int, ...], ...]
    translation: tuple[int, ...]

    def __post_init__(self):
        m = tuple(tuple(int(a) for a in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "translation", tuple(int(a) for a in self.translation))
        if any(len(row) != len(m) for row in m) or len(self.translation) != len(m):
            raise DimensionMismatch("unimodular map needs a square matrix and matching translation")
        if abs(bareiss_determinant([[Fraction(a) for a in row] for row in m])) != 1:
            raise InputError("matrix is not unimodular")

    @classmethod
    def identity(cls, d: int) -> "UnimodularMap":
        return cls(tuple(tuple(int(i == j) for j in range(d)) for i in range(d)), (0,) * d)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def __call__(self, p: Sequence[int]) -> Point:
        return tuple(a + b for a, b in zip(matvec(self.matrix, p), self.translation))

    def compose(self, other: "UnimodularMap") -> "UnimodularMap":
        """``self o other``."""
        m = [[sum(self.matrix[i][k] * other.matrix[k][j] for k in range(self.dim))
              for j in range(self.dim)] for i in range(self.dim)]
        return UnimodularMap(m, self(other.translation))

    def inverse(self) -> "UnimodularMap":
        inv = integer_inverse(self.matrix)
        return UnimodularMap(inv, tuple(-a for a in matvec(inv, self.translation)))

    def linear_part(self) -> "UnimodularMap":
        return UnimodularMap(self.matrix, (0,) * self.dim)


def _dot(a: Sequence[int], b: Sequence[int]):
    return sum(x * y for x, y in zip(a, b))


def _sub(a: Sequence[int], b: Sequence[int]) -> Point:
    return tuple(x - y for x, y in zip(a, b))


def _as_config(A) -> LatticeConfiguration:
    if isinstance(A, LatticeConfiguration):
        return A
    if isinstance(A, LatticePolytope):
        return LatticeConfiguration(A.dim_ambient, A.vertices)
    return LatticeConfiguration.from_points(A)


# --- dimension ---------------------------------------------------------------

def dimension(A) -> int:
    """Dimension of the affine span of ``A``."""
    A = _as_config(A)
    p0 = A.points[0]
    diffs = [[Fraction(c) for c in _sub(p, p0)] for p in A.points[1:]]
    return rank(diffs) if diffs else 0


def _affine_basis_indices(points: Sequence[Point]) -> list[int]:
    """Indices of a maximal affinely independent subset, chosen greedily in order."""
    chosen = [0]
    rows: list[list[Fraction]] = []
    for i in range(1, len(points)):
        cand = rows + [[Fraction(c) for c in _sub(points[i], points[0])]]
        if rank(cand) == len(cand):
            rows = cand
            chosen.append(i)
    return chosen


# --- convex hull ---------------------------------------------------------------

def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull_2d(points: Iterable[Sequence[int]]) -> list[Point]:
    """Vertices of a planar point set in counter-clockwise order (monotone chain).

    Collinear boundary points are dropped.  Lower-dimensional input returns the
    one or two extreme points.
    """
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def _facets_2d(ccw: list[Point]) -> list[tuple[Point, int]]:
    out = []
    n = len(ccw)
    for i in range(n):
        p, q = ccw[i], ccw[(i + 1) % n]
        normal = primitive((-(q[1] - p[1]), q[0] - p[0]))
        out.append((normal, _dot(normal, p)))
    return out


def placing_triangulation(A) -> list[tuple[Point, ...]]:
    """Placing triangulation of a full-dimensional configuration.

    Points are placed in sorted order after an initial simplex.  A new point
    is coned over every boundary simplex that it sees strictly; points inside
    the current hull are skipped.  Returns the list of full-dimensional
    simplices (as vertex tuples).
    """
    A = _as_config(A)
    d = A.dim_ambient
    pts = list(A.points)
    base = _affine_basis_indices(pts)
    if len(base) < d + 1:
        raise DegenerateHull(f"configuration has dimension {len(base) - 1} < {d}")
    first = tuple(pts[i] for i in base)
    simplices = [first]
    # boundary: facet (sorted tuple of d points) -> opposite vertex
    boundary: dict[tuple[Point, ...], Point] = {}

    def toggle(simplex):
        for k in range(d + 1):
            face = tuple(sorted(simplex[:k] + simplex[k + 1:]))
            if face in boundary:
                del boundary[face]
            else:
                boundary[face] = simplex[k]

    toggle(first)
    used = set(first)
    for p in pts:
        if p in used:
            continue
        visible = []
        for face, opp in boundary.items():
            n = normal_vector([_sub(q, face[0]) for q in face[1:]])
            side_opp = _dot(n, _sub(opp, face[0]))
            side_p = _dot(n, _sub(p, face[0]))
            if side_p * side_opp < 0:
                visible.append(face)
        if not visible:
            continue
        for face in visible:
            s = face + (p,)
            simplices.append(s)
            toggle(s)
        used.add(p)
    return simplices


def _simplex_volume(s: Sequence[Point]) -> int:
    m = [[Fraction(c) for c in _sub(q, s[0])] for q in s[1:]]
    return abs(int(bareiss_determinant(m)))


def _hull_from_triangulation(A: LatticeConfiguration) -> LatticePolytope:
    d = A.dim_ambient
    simplices = placing_triangulation(A)
    count: dict[tuple[Point, ...], list] = {}
    for s in simplices:
        for k in range(d + 1):
            face = tuple(sorted(s[:k] + s[k + 1:]))
            count.setdefault(face, []).append(s[k])
    facets = set()
    for face, opps in count.items():
        if len(opps) != 1:
            continue
        n = primitive(normal_vector([_sub(q, face[0]) for q in face[1:]]))
        if _dot(n, _sub(opps[0], face[0])) < 0:
            n = tuple(-c for c in n)
        facets.add((n, _dot(n, face[0])))
    facets = sorted(facets)
    vertices = []
    for p in A.points:
        tight = [[Fraction(c) for c in n] for n, off in facets if _dot(n, p) == off]
        if len(tight) >= d and rank(tight) == d:
            vertices.append(p)
    return LatticePolytope(d, tuple(sorted(vertices)), tuple(facets), d)


def _projection_coords(A: LatticeConfiguration, k: int) -> tuple[int, ...]:
    """Coordinate subset on which the affine span of ``A`` projects bijectively."""
    p0 = A.points[0]
    diffs = [_sub(p, p0) for p in A.points[1:]]
    for coords in itertools.combinations(range(A.dim_ambient), k):
        sub = [[Fraction(v[c]) for c in coords] for v in diffs]
        if rank(sub) == k:
            return coords
    raise AssertionError("no projection found")  # unreachable for rank-k input


def _span_equations(A: LatticeConfiguration) -> list[tuple[Point, int]]:
    from .linalg import nullspace

    p0 = A.points[0]
    diffs = [[Fraction(c) for c in _sub(p, p0)] for p in A.points[1:]]
    basis = nullspace(diffs, ncols=A.dim_ambient) if diffs else [
        [Fraction(int(i == j)) for i in range(A.dim_ambient)] for j in range(A.dim_ambient)]
    eqs = []
    for vec in basis:
        den = 1
        for x in vec:
            den = den * x.denominator // gcd(den, x.denominator)
        n = primitive([int(x * den) for x in vec])
        eqs.append((n, _dot(n, p0)))
    return eqs


def convex_hull(A) -> LatticePolytope:
    """Convex hull with vertices and primitive inner facet normals.

    Lower-dimensional configurations give a polytope flagged ``degenerate``;
    see :func:`facet_normals` for the operation that refuses them.
    """
    A = _as_config(A)
    d = A.dim_ambient
    k = dimension(A)
    if k == d:
        if d == 1:
            lo, hi = A.points[0], A.points[-1]
            return LatticePolytope(1, (lo, hi), (((1,), lo[0]), ((-1,), -hi[0])), 1)
        if d == 2:
            ccw = hull_2d(A.points)
            return LatticePolytope(2, tuple(sorted(ccw)), tuple(sorted(_facets_2d(ccw))), 2)
        return _hull_from_triangulation(A)
    # lower-dimensional: hull inside a coordinate projection, lifted back
    if k == 0:
        p = A.points[0]
        return LatticePolytope(d, (p,), (), 0, tuple(_span_equations(A)))
    coords = _projection_coords(A, k)
    proj = {tuple(p[c] for c in coords): p for p in A.points}
    sub = convex_hull(LatticeConfiguration(k, tuple(proj)))
    facets = []
    for n, off in sub.facets:
        lifted = [0] * d
        for c, val in zip(coords, n):
            lifted[c] = val
        facets.append((tuple(lifted), off))
    vertices = tuple(sorted(proj[v] for v in sub.vertices))
    return LatticePolytope(d, vertices, tuple(sorted(facets)), k, tuple(_span_equations(A)))


def facet_normals(P) -> list[Point]:
    """Primitive inner normals, one per facet."""
    if not isinstance(P, LatticePolytope):
        P = convex_hull(P)
    if P.degenerate:
        raise DegenerateHull(f"polytope has dimension {P.dimension} < {P.dim_ambient}")
    return [n for n, _ in P.facets]


def ccw_vertices(P) -> list[Point]:
    """Vertices of a polygon in counter-clockwise order."""
    if isinstance(P, LatticePolytope):
        return hull_2d(P.vertices)
    return hull_2d(_as_config(P).points)


# --- lattice points and volumes ----------------------------------------------

def lattice_points(P) -> LatticeConfiguration:
    """All integer points of a polytope, by a bounding-box scan."""
    if not isinstance(P, LatticePolytope):
        P = convex_hull(P)
    ranges = []
    for i in range(P.dim_ambient):
        vals = [v[i] for v in P.vertices]
        ranges.append(range(min(vals), max(vals) + 1))
    pts = [p for p in itertools.product(*ranges) if P.contains(p)]
    return LatticeConfiguration(P.dim_ambient, tuple(pts))


def is_saturated(A) -> bool:
    A = _as_config(A)
    return lattice_points(convex_hull(A)).as_set() == A.as_set()


def normalized_volume(A) -> int:
    """``d!`` times the Euclidean volume of the hull; 0 for lower-dimensional input."""
    if isinstance(A, LatticePolytope):
        if A.degenerate:
            return 0
        A = LatticeConfiguration(A.dim_ambient, A.vertices)
    A = _as_config(A)
    if dimension(A) < A.dim_ambient:
        return 0
    return sum(_simplex_volume(s) for s in placing_triangulation(A))


def is_full_dimensional(A) -> bool:
    A = _as_config(A)
    return dimension(A) == A.dim_ambient


def minkowski_sum(P, Q) -> LatticePolytope:
    """Hull of all pairwise vertex sums."""
    P = P if isinstance(P, LatticePolytope) else convex_hull(P)
    Q = Q if isinstance(Q, LatticePolytope) else convex_hull(Q)
    if P.dim_ambient != Q.dim_ambient:
        raise DimensionMismatch("Minkowski sum of polytopes in different ambient spaces")
    sums = {tuple(a + b for a, b in zip(p, q)) for p in P.vertices for q in Q.vertices}
    return convex_hull(LatticeConfiguration(P.dim_ambient, tuple(sums)))


@lru_cache(maxsize=4096)
def _volume_of_sum(vertex_sets: tuple[tuple[Point, ...], ...]) -> int:
    poly = convex_hull(LatticeConfiguration(len(vertex_sets[0][0]), vertex_sets[0]))
    for vs in vertex_sets[1:]:
        poly = minkowski_sum(poly, LatticeConfiguration(len(vs[0]), vs))
    return normalized_volume(poly)


def mixed_volume(entries) -> int:
    """Normalized mixed volume by Minkowski-sum inclusion-exclusion.

    ``entries`` is a list of ``(configuration, multiplicity)`` pairs whose
    multiplicities add up to the ambient dimension; a bare configuration counts
    with multiplicity 1.  With this normalization ``mixed_volume([(A, d)])``
    equals ``normalized_volume(A)``.
    """
    expanded: list[LatticeConfiguration] = []
    for e in entries:
        if isinstance(e, tuple) and len(e) == 2 and isinstance(e[1], int) \
                and not isinstance(e[0], int):
            conf, mult = e
        else:
            conf, mult = e, 1
        conf = _as_config(conf)
        if mult < 0:
            raise InputError("negative multiplicity")
        expanded.extend([conf] * mult)
    if not expanded:
        raise DimensionMismatch("mixed volume of an empty list")
    d = expanded[0].dim_ambient
    if any(c.dim_ambient != d for c in expanded):
        raise DimensionMismatch("configurations live in different ambient spaces")
    if len(expanded) != d:
        raise DimensionMismatch(f"multiplicities add up to {len(expanded)}, expected {d}")
    verts = [convex_hull(c).vertices for c in expanded]
    total = 0
    for k in range(1, d + 1):
        sign = (-1) ** (d - k)
        for subset in itertools.combinations(range(d), k):
            key = tuple(sorted(verts[i] for i in subset))
            total += sign * _volume_of_sum(key)
    q, r = divmod(total, factorial(d))
    if r:
        raise AssertionError(f"inclusion-exclusion sum {total} not divisible by {d}!")
    return q


def pick_counts(A) -> tuple[int, int]:
    """(interior, boundary) lattice point counts of a full-dimensional polygon hull."""
    A = _as_config(A)
    if A.dim_ambient != 2 or dimension(A) != 2:
        raise DegenerateHull("pick_counts needs a two-dimensional configuration in Z^2")
    P = convex_hull(A)
    interior = boundary = 0
    for p in lattice_points(P).points:
        if P.on_boundary(p):
            boundary += 1
        else:
            interior += 1
    return interior, boundary


# --- unimodular maps ---------------------------------------------------------

def apply_unimodular(A, T: UnimodularMap) -> LatticeConfiguration:
    A = _as_config(A)
    if T.dim != A.dim_ambient:
        raise DimensionMismatch("map and configuration dimensions differ")
    return LatticeConfiguration(A.dim_ambient, tuple(T(p) for p in A.points))


def random_unimodular(d: int, rng: random.Random, steps: int = 6,
                      max_shift: int = 3, max_translation: int = 10) -> UnimodularMap:
    """Product of random elementary shears, swaps and negations plus a translation."""
    m = [[int(i == j) for j in range(d)] for i in range(d)]
    for _ in range(steps):
        kind = rng.randrange(3) if d > 1 else 2
        if kind == 0:
            i, j = rng.sample(range(d), 2)
            c = rng.randint(-max_shift, max_shift)
            m[i] = [a + c * b for a, b in zip(m[i], m[j])]
        elif kind == 1:
            i, j = rng.sample(range(d), 2)
            m[i], m[j] = m[j], m[i]
        else:
            i = rng.randrange(d)
            m[i] = [-a for a in m[i]]
    t = tuple(rng.randint(-max_translation, max_translation) for _ in range(d))
    return UnimodularMap(m, t)
