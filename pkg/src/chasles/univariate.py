"""Dense univariate polynomials over Q as coefficient lists (increasing degree).

Used by the eliminant paths, where speed matters more than generality.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

import mpmath

Coeffs = list[Fraction]


def trim(f: Sequence) -> Coeffs:
    out = [Fraction(c) for c in f]
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(f: Sequence) -> int:
    return len(trim(f)) - 1


def evaluate(f: Sequence, x):
    acc = 0 * x
    for c in reversed(f):
        acc = acc * x + c
    return acc


def add(f: Sequence, g: Sequence) -> Coeffs:
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)])


def mul(f: Sequence, g: Sequence) -> Coeffs:
    if not f or not g:
        return []
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out)


def divmod_poly(f: Sequence, g: Sequence) -> tuple[Coeffs, Coeffs]:
    f, g = trim(f), trim(g)
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(f)
    dg = len(g) - 1
    if len(rem) - 1 < dg:
        return [], rem
    quot = [Fraction(0)] * (len(rem) - dg)
    lc = g[-1]
    for k in range(len(rem) - 1 - dg, -1, -1):
        c = rem[k + dg] / lc
        quot[k] = c
        if c:
            for j, b in enumerate(g):
                rem[k + j] -= c * b
    return trim(quot), trim(rem[:dg])


def exact_div(f: Sequence, g: Sequence) -> Coeffs:
    q, r = divmod_poly(f, g)
    if r:
        raise ArithmeticError("univariate division is not exact")
    return q


def monic(f: Sequence) -> Coeffs:
    f = trim(f)
    return [c / f[-1] for c in f] if f else []


def poly_gcd(f: Sequence, g: Sequence) -> Coeffs:
    """Monic gcd (Euclid over Q)."""
    a, b = trim(f), trim(g)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def derivative(f: Sequence) -> Coeffs:
    return trim([k * c for k, c in enumerate(f)][1:])


def squarefree_part(f: Sequence) -> Coeffs:
    f = trim(f)
    if len(f) <= 2:
        return monic(f)
    return monic(exact_div(f, poly_gcd(f, derivative(f))))


def strip_zero_roots(f: Sequence) -> Coeffs:
    f = trim(f)
    k = 0
    while k < len(f) and f[k] == 0:
        k += 1
    return f[k:]


def integer_primitive(f: Sequence) -> Coeffs:
    """Scale to coprime integer coefficients with positive leading coefficient."""
    f = trim(f)
    if not f:
        return []
    den = 1
    for c in f:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in f]
    g = 0
    for c in ints:
        g = gcd(g, c)
    sign = 1 if ints[-1] > 0 else -1
    return [Fraction(sign * c // g) for c in ints]


def from_roots(roots: Sequence) -> Coeffs:
    out: Coeffs = [Fraction(1)]
    for r in roots:
        out = mul(out, [-Fraction(r), Fraction(1)])
    return out


def rational_roots(f: Sequence, digits: int = 60, max_digits: int = 480) -> list[Fraction]:
    """Exact nonzero rational roots of ``f``.

    Roots of the squarefree part are approximated with mpmath, real
    approximations are rounded to rationals by continued fractions and only
    exact roots are kept.  While some real root fails to reconstruct, the
    precision is doubled up to ``max_digits`` (irrational real roots always
    fail, so they cost the full escalation).
    """
    sf = integer_primitive(squarefree_part(strip_zero_roots(f)))
    if len(sf) <= 1:
        return []
    if len(sf) == 2:
        return [-sf[0] / sf[1]]
    found: set[Fraction] = set()
    while True:
        unresolved = 0
        with mpmath.workdps(digits):
            coeffs = [mpmath.mpf(int(c)) for c in reversed(sf)]
            try:
                approx = mpmath.polyroots(coeffs, maxsteps=500, extraprec=2 * digits)
            except mpmath.libmp.NoConvergence:
                approx = None
            for z in approx or []:
                scale = max(1, abs(z))
                if abs(mpmath.im(z)) > mpmath.mpf(10) ** (-(digits // 3)) * scale:
                    continue
                x = Fraction(mpmath.nstr(mpmath.re(z), digits, min_fixed=-mpmath.inf,
                                         max_fixed=mpmath.inf))
                cand = x.limit_denominator(10 ** (digits // 2))
                if cand and evaluate(sf, cand) == 0:
                    found.add(cand)
                else:
                    unresolved += 1
        if approx is not None and not unresolved:
            break
        if digits * 2 > max_digits:
            break
        digits *= 2
    return sorted(found)
