"""Sylvester resultants, one-dimensional directional resultants and the
product-of-roots formula for planar sparse systems.

Only facial systems that live in a rank-one lattice are handled: after
restricting two planar Laurent polynomials to the faces of minimal weight for
a primitive ``v``, both faces are univariate in the coordinate of ``v``-perp.
No general sparse resultant is constructed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import (
    DimensionMismatch,
    FaceSystemDegenerate,
    InputError,
    NotEssential,
    ZeroPolynomial,
)
from .lattice_geometry import LatticeConfiguration, facet_normals, minkowski_sum
from .linalg import bareiss_determinant
from .polynomials import LaurentPolynomial, fraction_to_str, restrict_to_face


def _trim(coeffs: Sequence) -> list:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def sylvester_matrix(f: Sequence, g: Sequence, deg_f: int | None = None,
                     deg_g: int | None = None) -> list[list]:
    """Sylvester matrix of two coefficient lists given by increasing degree.

    Declared degrees may exceed the actual ones (the missing leading
    coefficients are zero).
    """
    m = len(_trim(f)) - 1 if deg_f is None else deg_f
    n = len(_trim(g)) - 1 if deg_g is None else deg_g
    fz = list(f) + [0] * (m + 1 - len(f))
    gz = list(g) + [0] * (n + 1 - len(g))
    zero = 0 * (fz[0] if fz else 0)
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[i + k] = fz[m - k]
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[i + k] = gz[n - k]
        rows.append(row)
    return rows


def sylvester_resultant(f: Sequence, g: Sequence, deg_f: int | None = None,
                        deg_g: int | None = None):
    """Resultant of two univariate polynomials over an exact domain.

    ``f`` and ``g`` are coefficient lists by increasing degree; entries may be
    rationals or :class:`LaurentPolynomial` instances.  Computed as the
    Bareiss determinant of the Sylvester matrix, so polynomial coefficients
    give a polynomial result.  ``Res(x - 1, x - 2) == -1``.
    """
    if not _trim(f) or not _trim(g):
        raise ZeroPolynomial("resultant with the zero polynomial")
    m = len(_trim(f)) - 1 if deg_f is None else deg_f
    n = len(_trim(g)) - 1 if deg_g is None else deg_g
    if m == 0 and n == 0:
        return 1
    return bareiss_determinant(sylvester_matrix(f, g, m, n))


def resultant(f: LaurentPolynomial, g: LaurentPolynomial, var: int) -> LaurentPolynomial:
    """Eliminate variable ``var`` from two Laurent polynomials.

    Each input is first multiplied by a power of ``var`` so that its exponents
    in ``var`` start at 0; that does not change common zeros in the torus.
    The result lives in the same ring and does not involve ``var``.
    """
    if f.nvars != g.nvars:
        raise DimensionMismatch("polynomials in different rings")
    if not f or not g:
        raise ZeroPolynomial("resultant with the zero polynomial")

    def coeff_list(p: LaurentPolynomial):
        cs = p.coefficients_in(var)
        lo, hi = min(cs), max(cs)
        zero = LaurentPolynomial.zero(p.nvars)
        out = [cs.get(k, zero) for k in range(lo, hi + 1)]
        if all(c.is_constant() for c in out):
            return [c.constant_term() for c in out], True
        return out, False

    fc, f_const = coeff_list(f)
    gc, g_const = coeff_list(g)
    if f_const and g_const:
        return LaurentPolynomial.constant(sylvester_resultant(fc, gc), f.nvars)
    fc = [c if isinstance(c, LaurentPolynomial) else LaurentPolynomial.constant(c, f.nvars) for c in fc]
    gc = [c if isinstance(c, LaurentPolynomial) else LaurentPolynomial.constant(c, f.nvars) for c in gc]
    res = sylvester_resultant(fc, gc)
    if not isinstance(res, LaurentPolynomial):
        res = LaurentPolynomial.constant(res, f.nvars)
    return res


def discriminant(coeffs: Sequence):
    """Discriminant ``(-1)^(n(n-1)/2) Res(f, f') / lc(f)`` of a coefficient list."""
    f = _trim(coeffs)
    n = len(f) - 1
    if n < 1:
        raise InputError("discriminant needs degree at least 1")
    df = [k * c for k, c in enumerate(f)][1:]
    res = sylvester_resultant(f, df, n, n - 1)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res / f[-1]


# --- directional resultants ---------------------------------------------------

@dataclass(frozen=True)
class DirectionalResultantRecord:
    normal: tuple[int, ...]
    value: Fraction
    mu: int
    lattice_index: int
    essential: bool = True
    face_polys: tuple = field(default=(), compare=False, repr=False)

    def to_json(self) -> dict:
        return {"v": list(self.normal), "mu": self.mu, "lattice_index": self.lattice_index,
                "value": fraction_to_str(self.value)}


def _lattice_index(supports: Sequence[Sequence[int]]) -> int:
    g = 0
    for s in supports:
        for a in s:
            g = gcd(g, a - min(s))
    return g


def mu_exponent_1d(supports: Sequence[Sequence[int]]) -> int:
    """Exponent turning the irreducible resultant of a rank-one facial system into mRes.

    ``supports`` are two finite subsets of ``Z``.  With both supports spanning
    a segment the essential subset is the whole system and the exponent is
    the index of the lattice generated by the support differences; with one
    support a single point the essential subset is that point and the
    exponent is the length of the other support.  Two single points have no
    essential subset (:class:`NotEssential`).
    """
    if len(supports) != 2:
        raise DimensionMismatch("a rank-one facial system has exactly two supports")
    sizes = [len(set(s)) for s in supports]
    if any(k == 0 for k in sizes):
        raise InputError("empty support")
    if sizes[0] == 1 and sizes[1] == 1:
        raise NotEssential("two monomials: resultant is 1 by convention")
    if sizes[0] == 1 or sizes[1] == 1:
        other = supports[1] if sizes[0] == 1 else supports[0]
        return max(other) - min(other)
    return _lattice_index(supports)


def _edge_coeffs(edge: LaurentPolynomial) -> tuple[list[Fraction], int]:
    """Coefficients (increasing degree) after dividing out the lowest power."""
    exps = [e[0] for e in edge.terms]
    lo = min(exps)
    out = [Fraction(0)] * (max(exps) - lo + 1)
    for e, c in edge.terms.items():
        out[e[0] - lo] = c
    return out, lo


def directional_resultant(polys: Sequence[LaurentPolynomial], v: Sequence[int]
                          ) -> DirectionalResultantRecord:
    """mRes of the facial system of two planar polynomials in direction ``v``.

    Both polynomials are restricted to their faces of minimal ``v``-weight and
    written in the coordinate of the lattice ``v``-perp; the value is the
    irreducible facial resultant raised to :func:`mu_exponent_1d`.  Raises
    :class:`FaceSystemDegenerate` when that value is 0.
    """
    if len(polys) != 2 or any(p.nvars != 2 for p in polys):
        raise DimensionMismatch("directional resultants are implemented for two planar polynomials")
    v = tuple(int(a) for a in v)
    faces = [restrict_to_face(p, v) for p in polys]
    coeffs = []
    supports = []
    for fr in faces:
        c, _ = _edge_coeffs(fr.edge_poly)
        coeffs.append(c)
        supports.append([k for k, x in enumerate(c) if x])
    try:
        mu = mu_exponent_1d(supports)
    except NotEssential:
        return DirectionalResultantRecord(v, Fraction(1), 1, 1, essential=False,
                                          face_polys=tuple(fr.face_poly for fr in faces))
    sizes = [len(s) for s in supports]
    if 1 in sizes:
        k = sizes.index(1)
        irreducible = coeffs[k][0]
        index = 1
    else:
        index = _lattice_index(supports)
        reduced = [[c[j] for j in range(0, len(c), index)] for c in coeffs]
        irreducible = Fraction(sylvester_resultant(reduced[0], reduced[1]))
    value = Fraction(irreducible) ** mu
    if value == 0:
        raise FaceSystemDegenerate(f"facial system in direction {v} has a common root", normal=v)
    return DirectionalResultantRecord(v, value, mu, index,
                                      face_polys=tuple(fr.face_poly for fr in faces))


@dataclass(frozen=True)
class CoordinateProduct:
    """``value`` equals the product of coordinate ``coordinate`` over all torus
    roots (with multiplicity), up to the sign recorded as ambiguous."""

    coordinate: int
    value: Fraction
    records: tuple[DirectionalResultantRecord, ...]
    sign_ambiguous: bool = True


def newton_sum_normals(polys: Sequence[LaurentPolynomial]) -> list[tuple[int, ...]]:
    """Inner facet normals of the Minkowski sum of the Newton polytopes."""
    total = polys[0].newton_polytope()
    for p in polys[1:]:
        total = minkowski_sum(total, p.newton_polytope())
    return facet_normals(total)


def directional_resultants(polys: Sequence[LaurentPolynomial]) -> list[DirectionalResultantRecord]:
    return [directional_resultant(polys, v) for v in newton_sum_normals(polys)]


def product_of_coordinates(polys: Sequence[LaurentPolynomial], i: int,
                           records: Sequence[DirectionalResultantRecord] | None = None
                           ) -> CoordinateProduct:
    """Product of the ``i``-th coordinates of all torus roots of a planar system, up to sign.

    Multiplies ``mRes_v ** v[i]`` over the inner facet normals ``v`` of the
    Minkowski sum of Newton polytopes; all other directions contribute 1.
    """
    if records is None:
        records = directional_resultants(polys)
    value = Fraction(1)
    for rec in records:
        k = rec.normal[i]
        if k:
            value *= rec.value ** k
    return CoordinateProduct(i, value, tuple(records))
