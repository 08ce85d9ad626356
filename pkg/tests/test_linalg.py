from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from chasles.linalg import (
    bareiss_determinant,
    fraction_free_echelon,
    integer_inverse,
    normal_vector,
    nullspace,
    rank,
    unimodular_completion,
)
from chasles.polynomials import LaurentPolynomial


def leibniz_det(m):
    import itertools
    n = len(m)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = Fraction(1)
        for i in range(n):
            prod *= m[i][perm[i]]
        total += sign * prod
    return total


small = st.fractions(min_value=-20, max_value=20, max_denominator=7)


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
@settings(max_examples=60, deadline=None)
def test_bareiss_matches_leibniz(m):
    assert bareiss_determinant(m) == leibniz_det(m)


def test_determinant_with_polynomial_entries():
    x, y = LaurentPolynomial.variables(2)
    m = [[x, y], [y, x]]
    assert bareiss_determinant(m) == x * x - y * y


def test_identity_has_empty_kernel():
    assert nullspace([[1, 0], [0, 1]]) == []


def test_row_kernel():
    assert nullspace([[1, 1]]) == [[Fraction(-1), Fraction(1)]]


@given(st.lists(st.lists(st.integers(-5, 5), min_size=5, max_size=5), min_size=1, max_size=4))
@settings(max_examples=60, deadline=None)
def test_nullspace_dimension_and_vanishing(m):
    basis = nullspace(m)
    assert len(basis) == 5 - rank(m)
    for v in basis:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)


def test_echelon_pivots():
    rows, pivots = fraction_free_echelon([[0, 2, 4], [0, 1, 2], [1, 0, 0]])
    assert pivots == [0, 1]
    assert len(rows) == 2


def test_normal_vector_is_orthogonal():
    n = normal_vector([(1, 2, 3), (0, 1, -1)])
    assert sum(a * b for a, b in zip(n, (1, 2, 3))) == 0
    assert sum(a * b for a, b in zip(n, (0, 1, -1))) == 0
    assert any(n)


@pytest.mark.parametrize("v", [(1, 0), (0, -1), (3, 5), (-4, 7), (2, 3, 5), (6, 10, 15)])
def test_unimodular_completion(v):
    u = unimodular_completion(v)
    d = len(v)
    cols = [[u[i][j] for i in range(d)] for j in range(d)]
    assert sum(a * b for a, b in zip(v, cols[0])) == 1
    for c in cols[1:]:
        assert sum(a * b for a, b in zip(v, c)) == 0
    assert abs(bareiss_determinant(u)) == 1


def test_integer_inverse_roundtrip():
    rng = random.Random(1)
    from chasles.lattice_geometry import random_unimodular
    for _ in range(20):
        m = [list(r) for r in random_unimodular(3, rng).matrix]
        inv = integer_inverse(m)
        prod = [[sum(m[i][k] * inv[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
        assert prod == [[int(i == j) for j in range(3)] for i in range(3)]
