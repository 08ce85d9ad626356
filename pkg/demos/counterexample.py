"""A five-point triangle where the extra zero is not rational.

Restricting to the parabola y = x^2 leaves a quadratic whose discriminant in
the free parameter t is not a square, so the two remaining zeros are
conjugate over Q(t).
"""
from chasles import is_chasles_configuration
from chasles.verification import NON_CHASLES, nonrational_quotient

rep = is_chasles_configuration(NON_CHASLES)
print("Chasles:", rep.is_chasles, "-", rep.reason)
q, disc = nonrational_quotient()
# the parameter t is the third variable, printed as z by default
print("quotient:", str(q).replace("z", "t"))
print("discriminant:", str(disc).replace("z", "t"))
