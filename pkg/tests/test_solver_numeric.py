import random

import pytest

from chasles import univariate as up
from chasles.chasles_core import ChaslesStructure, family_pq
from chasles.errors import PositiveDimensional
from chasles.polynomials import LaurentPolynomial, vanishing_space
from chasles.resultants import product_of_coordinates, resultant
from chasles.solver_numeric import (
    count_torus_roots,
    random_system,
    solve_2d,
    univariate_roots,
)
from chasles.verification import CUBIC, TRIANGLE_ONE_INTERIOR, UNIT_SQUARE

x, y = LaurentPolynomial.variables(2)


def as_dict(roots, digits=6):
    return {complex(round(z.real, digits), round(z.imag, digits)): m for z, m in roots}


def test_univariate_examples():
    assert as_dict(univariate_roots([0, -1, 0, 1])) == {-1: 1, 0: 1, 1: 1}
    assert as_dict(univariate_roots(up.from_roots([2, 2, -1]))) == {2: 2, -1: 1}


def test_eliminant_roots_of_triangle_instance():
    F, G = vanishing_space(TRIANGLE_ONE_INTERIOR, [(1, 2), (3, 1)])
    r = up.strip_zero_roots(resultant(F, G, 1).clear_negative_exponents().univariate_coefficients(0))
    assert as_dict(univariate_roots(r)) == {1: 1, 3: 1, 8: 1}


def test_grid_system():
    f = x ** 3 - 6 * x ** 2 + 11 * x - 6
    g = y ** 3 - 6 * y ** 2 + 11 * y - 6
    sol = solve_2d(f, g)
    assert len(sol) == 9 and sol.total_multiplicity == 9
    got = {(round(r.coordinates[0].real, 8), round(r.coordinates[1].real, 8)) for r in sol}
    assert got == {(a, b) for a in (1, 2, 3) for b in (1, 2, 3)}
    assert all(r.residual < 1e-10 for r in sol)


def test_two_lines_meet_once():
    sol = solve_2d(1 + 2 * x - 3 * y, 4 - x + 5 * y)
    assert sol.total_multiplicity == 1


def test_positive_dimensional():
    with pytest.raises(PositiveDimensional):
        solve_2d((x - y) * (x + 1), (x - y) * (y + 2))


def test_root_counts_match_mixed_volumes():
    for S, expected in [(ChaslesStructure.from_configuration(TRIANGLE_ONE_INTERIOR), 3),
                        (family_pq(2), 6),
                        (ChaslesStructure((UNIT_SQUARE, UNIT_SQUARE), (1, 1)), 2),
                        (ChaslesStructure(([(0, 0), (1, 0), (0, 1)],) * 2, (1, 1)), 1)]:
        st = count_torus_roots(S, trials=10, seed=1)
        assert st.expected == expected
        assert not st.mismatches
        assert st.flagged_rate < 0.1


def test_numeric_product_matches_resultant_product():
    rng = random.Random(2)
    S = ChaslesStructure.from_configuration(CUBIC)
    for _ in range(5):
        F, G = random_system(S, rng)
        sol = solve_2d(F, G)
        for i in range(2):
            exact = abs(float(product_of_coordinates([F, G], i).value))
            assert abs(abs(sol.coordinate_product(i)) - exact) <= 1e-6 * exact


def test_statistics_are_reproducible():
    a = count_torus_roots(family_pq(1), trials=5, seed=42).to_json()
    b = count_torus_roots(family_pq(1), trials=5, seed=42).to_json()
    assert a == b and a["seed"] == 42
