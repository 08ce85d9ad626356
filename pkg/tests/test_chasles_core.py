from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from chasles.chasles_core import (
    ChaslesStructure,
    extra_point,
    extra_point_via_eliminant,
    family_pq,
    is_chasles_configuration,
    is_chasles_structure,
)
from chasles.errors import (
    DegenerateConfiguration,
    DegenerateInput,
    DimensionMismatch,
    FaceSystemDegenerate,
    InputError,
)
from chasles.lattice_geometry import LatticeConfiguration
from chasles.sampling import random_torus_point
from chasles.solver_numeric import solve_2d
from chasles.verification import CUBIC, NON_CHASLES, OCTAD, TRIANGLE_ONE_INTERIOR, a_d

TRIANGLE = ChaslesStructure.from_configuration(TRIANGLE_ONE_INTERIOR)


def distinct_points(rng, d, n, **kw):
    """Random torus points with pairwise distinct values in every coordinate."""
    while True:
        pts = [random_torus_point(rng, d, **kw) for _ in range(n)]
        if all(len({p[i] for p in pts}) == n for i in range(d)):
            return pts


def test_predicates_on_examples():
    assert is_chasles_configuration(CUBIC).N == 8
    rep = is_chasles_configuration(TRIANGLE_ONE_INTERIOR)
    assert rep and rep.N == 2 and rep.saturated
    assert is_chasles_configuration(OCTAD).N == 7
    assert not is_chasles_configuration(NON_CHASLES)
    for d in range(3, 7):
        rep = is_chasles_configuration(a_d(d))
        assert rep and rep.volume == 4 and rep.saturated and len(a_d(d)) == d + 3


def test_lower_dimensional_configuration():
    with pytest.raises(DegenerateConfiguration):
        is_chasles_configuration([(0, 0), (1, 1), (2, 2)])


def test_structure_predicate():
    rep = is_chasles_structure(family_pq(3))
    assert rep and rep.N == 7 and rep.mixed_volume == 8
    square = [(0, 0), (1, 0), (0, 1), (1, 1)]
    bad = is_chasles_structure([square, CUBIC], [1, 1])
    assert not bad and "not constant" in bad.reason
    assert not is_chasles_structure([square], [1])


def test_structure_shape_checks():
    with pytest.raises(InputError):
        ChaslesStructure((LatticeConfiguration(2, [(0, 0)]),), (1, 1))
    with pytest.raises(DimensionMismatch):
        ChaslesStructure((LatticeConfiguration(2, [(0, 0)]), LatticeConfiguration(3, [(0, 0, 0)])), (1, 1))


def test_triangle_example():
    res = extra_point(TRIANGLE, [(1, 2), (3, 1)])
    assert tuple(res.point) == (8, Fraction(-3, 2))
    assert res.certificates == (0, 0)
    assert res.to_json()["point"] == ["8/1", "-3/2"]


@given(st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_paths_agree_and_certify(seed):
    rng = random.Random(seed)
    S = family_pq(rng.randint(1, 3))
    pts = distinct_points(rng, 2, S.N, bound=20, max_den=6)
    try:
        a = extra_point(S, pts)
    except (DegenerateInput, FaceSystemDegenerate):
        return
    b = extra_point_via_eliminant(S, pts)
    assert a.point == b.point
    assert all(f.evaluate(a.point) == 0 for f in a.basis)
    assert tuple(a.point) not in pts


def test_permutation_invariance():
    rng = random.Random(7)
    S = ChaslesStructure.from_configuration(CUBIC)
    pts = distinct_points(rng, 2, 8)
    p = extra_point(S, pts).point
    for _ in range(3):
        rng.shuffle(pts)
        assert extra_point(S, pts).point == p


def test_scaling_equivariance():
    rng = random.Random(11)
    lam, mu = Fraction(3, 2), Fraction(-5, 7)
    for _ in range(10):
        pts = distinct_points(rng, 2, 2)
        a3, b3 = extra_point(TRIANGLE, pts).point
        scaled = [(lam * a, mu * b) for a, b in pts]
        assert tuple(extra_point(TRIANGLE, scaled).point) == (lam * a3, mu * b3)


def test_count_consistency_with_numeric_solver():
    rng = random.Random(3)
    for S in (TRIANGLE, family_pq(2), ChaslesStructure.from_configuration(CUBIC)):
        pts = distinct_points(rng, 2, S.N)
        res = extra_point(S, pts)
        roots = solve_2d(*res.basis)
        assert roots.total_multiplicity == S.N + 1
        for p in list(pts) + [res.point]:
            assert roots.nearest(p)[1] < 1e-8


def test_shared_coordinate_is_reported():
    # two inputs on a horizontal line force a common root at infinity on the x-facets
    S = family_pq(3)
    rng = random.Random(5)
    pts = distinct_points(rng, 2, S.N)
    pts[1] = (pts[1][0], pts[0][1])
    with pytest.raises(FaceSystemDegenerate):
        extra_point(S, pts)


def test_octad_eliminant_path():
    rng = random.Random(2)
    S = ChaslesStructure.from_configuration(OCTAD)
    pts = distinct_points(rng, 3, 7, bound=9, max_den=5)
    res = extra_point_via_eliminant(S, pts)
    assert all(f.evaluate(res.point) == 0 for f in res.basis)
    assert tuple(res.point) not in pts


def test_a3_eliminant_path():
    rng = random.Random(9)
    S = ChaslesStructure.from_configuration(a_d(3))
    for _ in range(5):
        pts = distinct_points(rng, 3, 3)
        res = extra_point_via_eliminant(S, pts)
        assert all(f.evaluate(res.point) == 0 for f in res.basis)


def test_wrong_number_of_points():
    with pytest.raises(InputError):
        extra_point(TRIANGLE, [(1, 2)])
    with pytest.raises(DimensionMismatch):
        extra_point(ChaslesStructure.from_configuration(OCTAD), [(1, 1, 1)] * 7)


def test_family_counts():
    for n in range(1, 8):
        S = family_pq(n)
        assert [len(A) for A in S.configurations] == [2 * n + 2, 2 * n + 2]
        assert S.mixed_volume() == 2 * n + 2
