"""Hull, volume and lattice-point operations against brute-force and scipy oracles."""

import itertools
import random
from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.spatial import ConvexHull

from chasles.errors import DegenerateHull, InputError
from chasles.lattice_geometry import (
    LatticeConfiguration,
    UnimodularMap,
    apply_unimodular,
    convex_hull,
    dimension,
    facet_normals,
    is_saturated,
    lattice_points,
    minkowski_sum,
    mixed_volume,
    normalized_volume,
    pick_counts,
    random_unimodular,
)
from chasles.linalg import normal_vector, primitive, rank

CUBIC = [(i, j) for i in range(4) for j in range(4) if i + j <= 3]
TRIANGLE = [(0, 0), (1, 1), (2, 1), (1, 2)]
A3 = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1), (0, 0, 2)]
OCTAD = [p for p in itertools.product(range(3), repeat=3) if sum(p) <= 2]


def brute_force_facets(points):
    """Primitive inner normals of supporting hyperplanes through d affinely independent points."""
    d = len(points[0])
    facets = set()
    for subset in itertools.combinations(points, d):
        diffs = [tuple(a - b for a, b in zip(p, subset[0])) for p in subset[1:]]
        n = normal_vector(diffs)
        if not any(n):
            continue
        n = primitive(n)
        vals = [sum(a * b for a, b in zip(n, p)) for p in points]
        off = sum(a * b for a, b in zip(n, subset[0]))
        if all(v >= off for v in vals):
            facets.add((n, off))
        elif all(v <= off for v in vals):
            facets.add((tuple(-a for a in n), -off))
    return facets


def brute_force_vertices(points, facets):
    d = len(points[0])
    out = []
    for p in points:
        tight = [n for n, off in facets if sum(a * b for a, b in zip(n, p)) == off]
        if tight and rank([list(n) for n in tight]) == d:
            out.append(tuple(p))
    return sorted(out)


def shoelace2(verts):
    n = len(verts)
    return abs(sum(verts[i][0] * verts[(i + 1) % n][1] - verts[(i + 1) % n][0] * verts[i][1]
                   for i in range(n)))


# --- worked examples ------------------------------------------------------------

def test_cubic_triangle():
    A = LatticeConfiguration.from_points(CUBIC)
    assert len(A) == 10
    assert dimension(A) == 2
    assert normalized_volume(A) == 9
    assert pick_counts(A) == (1, 9)


def test_triangle_with_interior_point():
    A = LatticeConfiguration.from_points(TRIANGLE)
    P = convex_hull(A)
    assert P.vertices == ((0, 0), (1, 2), (2, 1))
    assert normalized_volume(A) == 3
    assert is_saturated(A)
    assert pick_counts(A) == (1, 3)


def test_a3_hull_has_five_vertices():
    A = LatticeConfiguration.from_points(A3)
    P = convex_hull(A)
    # e3 is the midpoint of 0 and 2 e3, so only five points are vertices
    facets = brute_force_facets(A3)
    assert set(P.vertices) == set(brute_force_vertices(A3, facets))
    assert len(P.vertices) == 5
    assert set(P.facets) == facets
    assert normalized_volume(A) == 4
    assert is_saturated(A)


def test_octad():
    A = LatticeConfiguration.from_points(OCTAD)
    assert len(A) == 10
    assert normalized_volume(A) == 8
    assert is_saturated(A)


def test_quadrangle_sum_hexagon():
    P = convex_hull([(0, 0), (0, 3), (1, 4), (1, 1)])
    Q = convex_hull([(1, 0), (0, 1), (0, 4), (1, 3)])
    S = minkowski_sum(P, Q)
    assert set(S.vertices) == {(1, 0), (2, 1), (2, 7), (1, 8), (0, 7), (0, 1)}
    assert normalized_volume(S) == 4 * 7
    assert len(lattice_points(P)) == 8


def test_minkowski_identities():
    P = convex_hull(TRIANGLE)
    assert minkowski_sum(P, convex_hull([(0, 0)])).vertices == P.vertices
    square = minkowski_sum(convex_hull([(0, 0), (1, 0)]), convex_hull([(0, 0), (0, 1)]))
    assert set(square.vertices) == {(0, 0), (1, 0), (0, 1), (1, 1)}


def test_mixed_volume_examples():
    seg1, seg2 = [(0, 0), (1, 0)], [(0, 0), (0, 1)]
    assert mixed_volume([seg1, seg2]) == 1
    P3 = lattice_points(convex_hull([(0, 0), (0, 3), (1, 4), (1, 1)]))
    Q3 = lattice_points(convex_hull([(1, 0), (0, 1), (0, 4), (1, 3)]))
    assert mixed_volume([P3, Q3]) == 8
    assert mixed_volume([(CUBIC, 2)]) == 9
    assert mixed_volume([(OCTAD, 3)]) == 8


def test_mixed_volume_multiplicity_mismatch():
    with pytest.raises(InputError):
        mixed_volume([(CUBIC, 1)])


def test_saturation_and_dimension():
    assert not is_saturated([(0, 0), (2, 0)])
    assert dimension([(0, 0, 0), (0, 1, 0), (-1, 0, 2)]) == 2
    assert normalized_volume([(0, 0), (1, 1), (2, 2)]) == 0
    with pytest.raises(DegenerateHull):
        facet_normals(convex_hull([(0, 0), (1, 1), (2, 2)]))


def test_degenerate_hull_carries_equations():
    P = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0)])
    assert P.degenerate and P.dimension == 2
    assert all(sum(a * b for a, b in zip(n, p)) == off for n, off in P.equations for p in P.vertices)


def test_unimodular_map_validation():
    with pytest.raises(InputError):
        UnimodularMap(((2, 0), (0, 1)), (0, 0))
    T = UnimodularMap(((1, 1), (0, 1)), (3, -2))
    assert T.inverse().compose(T) == UnimodularMap.identity(2)


# --- property tests against oracles --------------------------------------------------

def configs(d, max_size=8, box=4):
    return st.sets(st.tuples(*[st.integers(0, box)] * d), min_size=d + 1, max_size=max_size)


@given(configs(2))
@settings(max_examples=150, deadline=None)
def test_planar_volume_matches_shoelace_and_pick(points):
    A = LatticeConfiguration(2, points)
    if dimension(A) < 2:
        assert normalized_volume(A) == 0
        return
    verts = [tuple(v) for v in convex_hull(A).vertices]
    from chasles.lattice_geometry import hull_2d
    ccw = hull_2d(verts)
    area2 = shoelace2(ccw)
    assert normalized_volume(A) == area2
    interior, boundary = pick_counts(A)
    edges = sum(gcd(ccw[(i + 1) % len(ccw)][0] - ccw[i][0], ccw[(i + 1) % len(ccw)][1] - ccw[i][1])
                for i in range(len(ccw)))
    assert boundary == edges
    assert area2 == 2 * interior + boundary - 2


@given(configs(3, max_size=7, box=3))
@settings(max_examples=80, deadline=None)
def test_spatial_hull_matches_brute_force(points):
    points = sorted(points)
    A = LatticeConfiguration(3, points)
    if dimension(A) < 3:
        return
    P = convex_hull(A)
    facets = brute_force_facets(points)
    assert set(P.facets) == facets
    assert list(P.vertices) == brute_force_vertices(points, facets)
    vol = ConvexHull(np.array(points, dtype=float)).volume * 6
    assert normalized_volume(A) == round(vol)


@given(configs(2, max_size=5, box=3), configs(2, max_size=5, box=3))
@settings(max_examples=60, deadline=None)
def test_mixed_volume_symmetry_and_diagonal(p, q):
    A, B = LatticeConfiguration(2, p), LatticeConfiguration(2, q)
    assert mixed_volume([A, B]) == mixed_volume([B, A])
    assert mixed_volume([A, A]) == normalized_volume(A)
    assert mixed_volume([A, B]) >= 0


@given(configs(2, max_size=6), st.integers(0, 10 ** 6))
@settings(max_examples=100, deadline=None)
def test_planar_invariants_under_unimodular_maps(points, seed):
    A = LatticeConfiguration(2, points)
    T = random_unimodular(2, random.Random(seed))
    B = apply_unimodular(A, T)
    assert normalized_volume(A) == normalized_volume(B)
    assert is_saturated(A) == is_saturated(B)
    if dimension(A) == 2:
        assert pick_counts(A) == pick_counts(B)


def test_lattice_points_of_cubic_triangle():
    assert lattice_points(convex_hull([(0, 0), (3, 0), (0, 3)])).as_set() == set(CUBIC)
