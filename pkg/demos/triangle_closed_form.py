"""The triangle with one interior lattice point.

Polynomials with monomials 1, xy, x^2y, xy^2 through two given points share a
third zero, given by a closed rational formula and collinear with the two.
"""
from fractions import Fraction

from chasles import ChaslesStructure, extra_point
from chasles.verification import TRIANGLE_ONE_INTERIOR, closed_form_extra_point

S = ChaslesStructure.from_configuration(TRIANGLE_ONE_INTERIOR)
p1, p2 = (Fraction(1), Fraction(2)), (Fraction(3), Fraction(1))
p3 = extra_point(S, [p1, p2]).point

def show(p):
    return "(" + ", ".join(str(c) for c in p) + ")"


print("points:", show(p1), show(p2))
print("third zero:", show(p3))
print("closed form:", show(closed_form_extra_point(p1, p2)))
(a1, b1), (a2, b2), (a3, b3) = p1, p2, p3
print("collinearity determinant:", (a2 - a1) * (b3 - b1) - (b2 - b1) * (a3 - a1))
