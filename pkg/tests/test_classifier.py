import random

import pytest
from hypothesis import given, settings, strategies as st

from chasles.chasles_core import family_pq, is_chasles_configuration
from chasles.classifier import (
    canonical_form,
    classify_planar_saturated_chasles,
    equivalence_witness,
    equivalent,
    invariant_key,
)
from chasles.lattice_geometry import (
    LatticeConfiguration,
    UnimodularMap,
    apply_unimodular,
    dimension,
    is_saturated,
    pick_counts,
    random_unimodular,
)
from chasles.verification import CUBIC, TRIANGLE_ONE_INTERIOR


@pytest.fixture(scope="module")
def sixteen():
    return classify_planar_saturated_chasles(4, 6)


def test_shear_and_reflection():
    shear = UnimodularMap(((1, 1), (0, 1)), (0, 0))
    assert canonical_form(TRIANGLE_ONE_INTERIOR) == canonical_form(apply_unimodular(TRIANGLE_ONE_INTERIOR, shear))
    flip = UnimodularMap(((0, 1), (1, 0)), (0, 0))
    assert canonical_form(CUBIC) == canonical_form(apply_unimodular(CUBIC, flip))


def test_quadrangles_are_reflections():
    P, Q = family_pq(1).configurations
    assert canonical_form(P) == canonical_form(Q)


def test_inequivalent():
    assert not equivalent(CUBIC, TRIANGLE_ONE_INTERIOR)


@given(st.sets(st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=3, max_size=8),
       st.integers(0, 10 ** 6))
@settings(max_examples=100, deadline=None)
def test_witness_maps_a_onto_its_image(points, seed):
    A = LatticeConfiguration(2, points)
    if dimension(A) < 2:
        return
    B = apply_unimodular(A, random_unimodular(2, random.Random(seed)))
    w = equivalence_witness(A, B)
    assert w is not None and apply_unimodular(A, w) == B


def test_sixteen_classes(sixteen):
    assert len(sixteen) == 16
    canon = [c.canonical for c in sixteen]
    assert len(set(canon)) == 16
    for c in sixteen:
        A = c.canonical
        assert is_saturated(A) and pick_counts(A)[0] == 1
        assert is_chasles_configuration(A)
        assert apply_unimodular(A, c.witness) == c.member
    vols = sorted(c.invariant_key[0] for c in sixteen)
    assert vols == [3, 4, 4, 4, 5, 5, 6, 6, 6, 6, 7, 7, 8, 8, 8, 9]


def test_examples_appear_once(sixteen):
    for A in (CUBIC, TRIANGLE_ONE_INTERIOR):
        assert sum(equivalent(A, c.canonical) for c in sixteen) == 1


def test_classes_pairwise_inequivalent(sixteen):
    for i, a in enumerate(sixteen):
        for b in sixteen[i + 1:]:
            assert not equivalent(a.canonical, b.canonical)


def test_vertex_bound_and_larger_box_are_stable(sixteen):
    canon = {c.canonical for c in sixteen}
    assert {c.canonical for c in classify_planar_saturated_chasles(4, 8)} == canon
    assert {c.canonical for c in classify_planar_saturated_chasles(5, 6)} == canon


def test_box_three_misses_only_the_long_edge_triangle(sixteen):
    # an edge of lattice length 4 cannot fit in [0, 3]^2 under any unimodular map
    small = {c.canonical for c in classify_planar_saturated_chasles(3, 6)}
    missing = {c.canonical for c in sixteen} - small
    assert len(small) == 15 and len(missing) == 1
    (A,) = missing
    assert invariant_key(A) == (8, 1, 8, 3, (2, 2, 4))
    assert equivalent(A, [(x, y) for x in range(5) for y in range(3) if x + 2 * y <= 4])
