"""Exact multivariate Laurent polynomials over the rationals.

A polynomial is a mapping from integer exponent tuples (negative entries
allowed) to nonzero ``Fraction`` coefficients.  Instances behave like ring
elements, so they can be used as matrix entries in :mod:`chasles.linalg`:
``/`` between polynomials is exact division and raises
:class:`~chasles.errors.InexactDivision` otherwise.

Example (two variables)::

    >>> x, y = LaurentPolynomial.variables(2)
    >>> f = x**2 * y - 5 * x * y
    >>> f.evaluate((Fraction(5), 3))
    Fraction(0, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Mapping, Sequence

from .errors import (
    DegenerateInput,
    DimensionMismatch,
    InexactDivision,
    InputError,
    NonInvertibleSubstitution,
    ZeroBase,
)
from .lattice_geometry import LatticeConfiguration, convex_hull
from .linalg import integer_inverse, matvec, nullspace, unimodular_completion

Exponent = tuple[int, ...]
_SCALARS = (int, Fraction)


class LaurentPolynomial:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], object] | None = None,
                 nvars: int | None = None):
        clean: dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                exp = tuple(int(e) for e in exp)
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        if nvars is None:
            if not terms:
                raise InputError("nvars is required for the zero polynomial")
            nvars = len(next(iter(terms)))
        for exp in clean:
            if len(exp) != nvars:
                raise DimensionMismatch(f"exponent {exp} does not have length {nvars}")
        self.nvars = nvars
        self.terms = clean
        self._hash = None

    # construction ----------------------------------------------------------------
    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> "LaurentPolynomial":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c, nvars: int) -> "LaurentPolynomial":
        c = Fraction(c)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPolynomial":
        return cls._raw({}, nvars)

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff=1) -> "LaurentPolynomial":
        return cls({tuple(exp): coeff}, len(exp))

    @classmethod
    def variable(cls, i: int, nvars: int) -> "LaurentPolynomial":
        return cls.monomial(tuple(int(j == i) for j in range(nvars)))

    @classmethod
    def variables(cls, nvars: int) -> list["LaurentPolynomial"]:
        return [cls.variable(i, nvars) for i in range(nvars)]

    @classmethod
    def from_univariate(cls, coeffs: Sequence, var: int = 0, nvars: int = 1) -> "LaurentPolynomial":
        """Polynomial in variable ``var`` from coefficients listed by increasing degree."""
        terms = {}
        for k, c in enumerate(coeffs):
            if c:
                exp = [0] * nvars
                exp[var] = k
                terms[tuple(exp)] = c
        return cls(terms, nvars)

    # basic queries ---------------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * self.nvars}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def support(self) -> LatticeConfiguration:
        if not self.terms:
            raise InputError("the zero polynomial has empty support")
        return LatticeConfiguration(self.nvars, tuple(self.terms))

    def newton_polytope(self):
        return convex_hull(self.support())

    def degree(self, var: int) -> int:
        return max(e[var] for e in self.terms)

    def min_degree(self, var: int) -> int:
        return min(e[var] for e in self.terms)

    def total_degree(self) -> int:
        return max(sum(e) for e in self.terms)

    def variables_used(self) -> set[int]:
        return {i for e in self.terms for i, k in enumerate(e) if k}

    def leading_term(self) -> tuple[Exponent, Fraction]:
        """Largest exponent in lex order."""
        exp = max(self.terms)
        return exp, self.terms[exp]

    # arithmetic ------------------------------------------------------------------
    def _coerce(self, other) -> "LaurentPolynomial | None":
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise DimensionMismatch("polynomials in different numbers of variables")
            return other
        if isinstance(other, _SCALARS):
            return LaurentPolynomial.constant(other, self.nvars)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPolynomial._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            c = Fraction(other)
            if not c:
                return LaurentPolynomial.zero(self.nvars)
            return LaurentPolynomial._raw({e: v * c for e, v in self.terms.items()}, self.nvars)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial._raw({e: c for e, c in out.items() if c}, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise NonInvertibleSubstitution("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            return LaurentPolynomial._raw({tuple(a * k for a in e): c ** k}, self.nvars)
        result = LaurentPolynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            c = Fraction(other)
            if not c:
                raise ZeroDivisionError("division of a polynomial by zero")
            return LaurentPolynomial._raw({e: v / c for e, v in self.terms.items()}, self.nvars)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        q, r = self.divmod_exact(other)
        return q

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def divmod_exact(self, divisor: "LaurentPolynomial"):
        """Exact division in the Laurent ring; raises InexactDivision if it does not divide."""
        if not divisor.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return LaurentPolynomial.zero(self.nvars), LaurentPolynomial.zero(self.nvars)
        if divisor.is_monomial():
            (de, dc), = divisor.terms.items()
            return LaurentPolynomial._raw(
                {tuple(a - b for a, b in zip(e, de)): c / dc for e, c in self.terms.items()},
                self.nvars), LaurentPolynomial.zero(self.nvars)
        n = self.nvars
        lo = [min(e[i] for e in self.terms) - max(e[i] for e in divisor.terms) for i in range(n)]
        hi = [max(e[i] for e in self.terms) - min(e[i] for e in divisor.terms) for i in range(n)]
        lead_e, lead_c = divisor.leading_term()
        rem = dict(self.terms)
        quot: dict[Exponent, Fraction] = {}
        dterms = list(divisor.terms.items())
        while rem:
            e = max(rem)
            qe = tuple(a - b for a, b in zip(e, lead_e))
            if any(q < l or q > h for q, l, h in zip(qe, lo, hi)):
                raise InexactDivision("polynomial division is not exact")
            qc = rem[e] / lead_c
            quot[qe] = qc
            for de, dc in dterms:
                k = tuple(a + b for a, b in zip(qe, de))
                v = rem.get(k, 0) - qc * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPolynomial._raw(quot, n), LaurentPolynomial.zero(n)

    def divides(self, other: "LaurentPolynomial") -> bool:
        try:
            other.divmod_exact(self)
        except InexactDivision:
            return False
        return True

    # comparison ------------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            if not other:
                return not self.terms
            return self.terms == {(0,) * self.nvars: Fraction(other)}
        if isinstance(other, LaurentPolynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # evaluation ------------------------------------------------------------------
    def evaluate(self, point: Sequence):
        """Exact value at a point; coordinates may be rationals or polynomials."""
        if len(point) != self.nvars:
            raise DimensionMismatch(f"point has {len(point)} coordinates, expected {self.nvars}")
        coords = [Fraction(c) if isinstance(c, _SCALARS) else c for c in point]
        cache: dict[tuple[int, int], object] = {}

        def power(i: int, k: int):
            key = (i, k)
            if key not in cache:
                base = coords[i]
                if k < 0 and base == 0:
                    raise ZeroBase(f"negative power of a zero coordinate (variable {i})")
                cache[key] = base ** k
            return cache[key]

        total = 0
        for exp, c in self.terms.items():
            term = c
            for i, k in enumerate(exp):
                if k:
                    term = term * power(i, k)
            total = total + term
        if isinstance(total, int):
            total = Fraction(total)
        return total

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (tuple, list, RationalPoint)):
            point = as_point(point[0])
        return self.evaluate(point)

    def evaluate_complex(self, point: Sequence[complex]) -> complex:
        total = 0j
        for exp, c in self.terms.items():
            term = complex(c)
            for z, k in zip(point, exp):
                if k:
                    term *= z ** k
            total += term
        return total

    def abs_scale(self, point: Sequence[complex]) -> float:
        """Sum of absolute values of the terms at ``point`` (residual scale)."""
        total = 0.0
        for exp, c in self.terms.items():
            term = abs(float(c))
            for z, k in zip(point, exp):
                if k:
                    term *= abs(z) ** k
            total += term
        return total

    # restructuring --------------------------------------------------------------
    def multiply_monomial(self, shift: Sequence[int]) -> "LaurentPolynomial":
        return LaurentPolynomial._raw(
            {tuple(a + b for a, b in zip(e, shift)): c for e, c in self.terms.items()},
            self.nvars)

    def clear_negative_exponents(self) -> "LaurentPolynomial":
        """Multiply by the smallest monomial making every exponent nonnegative and
        no variable divide the whole polynomial."""
        if not self.terms:
            return self
        shift = [-min(e[i] for e in self.terms) for i in range(self.nvars)]
        return self.multiply_monomial(shift)

    def coefficients_in(self, var: int) -> dict[int, "LaurentPolynomial"]:
        """Coefficients with respect to ``var``; each has ``var`` exponent 0."""
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[var]
            rest = e[:var] + (0,) + e[var + 1:]
            out.setdefault(k, {})[rest] = c
        return {k: LaurentPolynomial._raw(t, self.nvars) for k, t in out.items()}

    def univariate_coefficients(self, var: int = 0) -> list[Fraction]:
        """Coefficient list (increasing degree) of a polynomial in one variable only."""
        if not self.terms:
            return []
        if self.variables_used() - {var}:
            raise InputError("polynomial depends on more than one variable")
        if self.min_degree(var) < 0:
            raise InputError("negative exponent in univariate coefficient list")
        out = [Fraction(0)] * (self.degree(var) + 1)
        for e, c in self.terms.items():
            out[e[var]] = c
        return out

    def drop_variable(self, var: int) -> "LaurentPolynomial":
        """Remove a variable that does not occur."""
        if var in self.variables_used():
            raise InputError(f"variable {var} still occurs")
        return LaurentPolynomial._raw({e[:var] + e[var + 1:]: c for e, c in self.terms.items()},
                                      self.nvars - 1)

    def embed(self, nvars: int, positions: Sequence[int]) -> "LaurentPolynomial":
        """Re-index into ``nvars`` variables, variable ``i`` going to ``positions[i]``."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * nvars
            for i, k in enumerate(e):
                ne[positions[i]] += k
            out[tuple(ne)] = c
        return LaurentPolynomial(out, nvars)

    def derivative(self, var: int) -> "LaurentPolynomial":
        out = {}
        for e, c in self.terms.items():
            if e[var]:
                ne = e[:var] + (e[var] - 1,) + e[var + 1:]
                out[ne] = c * e[var]
        return LaurentPolynomial._raw(out, self.nvars)

    def content(self) -> Fraction:
        """Positive rational ``c`` such that ``self / c`` has coprime integer coefficients."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    # display ---------------------------------------------------------------------
    def __repr__(self):
        return f"LaurentPolynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        names = _var_names(self.nvars)
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), [-a for a in e])):
            c = self.terms[e]
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                cs = str(c) if c.denominator == 1 else f"({c})"
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _var_names(n: int) -> list[str]:
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


# --- torus points ------------------------------------------------------------

@dataclass(frozen=True)
class RationalPoint:
    """Point of the algebraic torus with exact nonzero rational coordinates."""

    coordinates: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coordinates)
        if any(c == 0 for c in coords):
            raise InputError(f"torus point has a zero coordinate: {coords}")
        object.__setattr__(self, "coordinates", coords)

    def __len__(self):
        return len(self.coordinates)

    def __iter__(self):
        return iter(self.coordinates)

    def __getitem__(self, i):
        return self.coordinates[i]


def as_point(p) -> tuple:
    """Coordinates of a point given as RationalPoint, tuple of rationals or tuple of polynomials."""
    if isinstance(p, RationalPoint):
        return p.coordinates
    return tuple(Fraction(c) if isinstance(c, (int, Fraction, str)) else c for c in p)


# --- support orderings and vanishing spaces ----------------------------------

def grlex_key(exp: Sequence[int]):
    return (sum(exp), tuple(exp))


def pivot_order(A: LatticeConfiguration) -> list[Exponent]:
    """Monomial priority for the echelon basis: hull vertices first, then the
    remaining points, each group in decreasing graded-lex order.

    For the full cubic support this makes the basis monic in ``x^3`` and
    ``y^3`` respectively, each free of the other's leading monomial.
    """
    verts = set(convex_hull(A).vertices) if len(A) > 1 else set(A.points)
    first = sorted((p for p in A.points if p in verts), key=grlex_key, reverse=True)
    rest = sorted((p for p in A.points if p not in verts), key=grlex_key, reverse=True)
    return first + rest


def exact_nullspace(matrix: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    """Exact kernel basis (fraction-free elimination + Cramer's rule)."""
    return nullspace(matrix, ncols=ncols)


def vanishing_space(A, points: Sequence, nvars: int | None = None) -> list[LaurentPolynomial]:
    """Basis of the polynomials supported on ``A`` that vanish at ``points``.

    Points may have rational coordinates, or polynomial coordinates in a
    larger ring (e.g. ``(t, t**2)`` with ``t`` an extra variable); in the
    latter case pass ``nvars`` for the ambient ring, whose first
    ``A.dim_ambient`` variables are the support variables.

    Over the rationals the basis is reduced: element ``k`` has coefficient 1
    at its pivot monomial and 0 at the other pivots, pivots being chosen in
    :func:`pivot_order`.  Over polynomial coefficient rings the basis is kept
    fraction free.  Raises :class:`DegenerateInput` when the evaluation matrix
    has rank below ``len(points)``.
    """
    if not isinstance(A, LatticeConfiguration):
        A = LatticeConfiguration.from_points(A)
    d = A.dim_ambient
    nvars = nvars or d
    pts = [as_point(p) for p in points]
    if len(set(map(tuple, pts))) != len(pts):
        raise InputError("points must be pairwise distinct")
    if len(pts) > len(A) - 1:
        raise InputError(f"{len(pts)} points but support has only {len(A)} monomials")
    # free columns are the last non-pivotal ones, so list preferred pivots last
    order = list(reversed(pivot_order(A)))
    if nvars == d:
        rows = [[LaurentPolynomial.monomial(u).evaluate(p) for u in order] for p in pts]
    else:
        rows = [[_eval_monomial_lifted(u, p, nvars) for u in order] for p in pts]
    basis_vectors = nullspace(rows, ncols=len(order)) if rows else nullspace([], ncols=len(order))
    expected = len(order) - len(pts)
    if len(basis_vectors) != expected:
        r = len(order) - len(basis_vectors)
        raise DegenerateInput(
            f"evaluation matrix has rank {r} < {len(pts)}: points are not generic for this support",
            rank=r, expected=len(pts))
    out = []
    for vec in basis_vectors:
        poly = LaurentPolynomial.zero(nvars)
        for u, c in zip(order, vec):
            if isinstance(c, LaurentPolynomial):
                if c:
                    poly = poly + c * LaurentPolynomial.monomial(tuple(u) + (0,) * (nvars - d))
            elif c:
                poly = poly + LaurentPolynomial.monomial(tuple(u) + (0,) * (nvars - d), c)
        out.append(poly)
    # present pivots in priority order
    out.reverse()
    return out


def _eval_monomial_lifted(u: Exponent, coords: Sequence, nvars: int):
    val = LaurentPolynomial.constant(1, nvars)
    for c, k in zip(coords, u):
        if not isinstance(c, LaurentPolynomial):
            c = LaurentPolynomial.constant(c, nvars)
        val = val * (c ** k)
    return val


# --- faces ---------------------------------------------------------------------

@dataclass(frozen=True)
class FaceRestriction:
    """Restriction of a polynomial to the face of minimal ``normal``-weight.

    ``edge_poly`` is written in coordinates of the lattice orthogonal to
    ``normal`` (``d - 1`` variables): ``u = shift + basis @ c``.
    """

    normal: tuple[int, ...]
    restricted_support: LatticeConfiguration
    shift: tuple[int, ...]
    edge_poly: LaurentPolynomial
    face_poly: LaurentPolynomial
    perp_basis: tuple[tuple[int, ...], ...]


def perp_basis(v: Sequence[int]) -> list[tuple[int, ...]]:
    """Deterministic lattice basis of ``{u : v . u = 0}`` for primitive ``v``."""
    U = unimodular_completion(v)
    d = len(v)
    return [tuple(U[i][j] for i in range(d)) for j in range(1, d)]


def restrict_to_face(f: LaurentPolynomial, v: Sequence[int]) -> FaceRestriction:
    if not f.terms:
        raise InputError("cannot restrict the zero polynomial")
    v = tuple(int(a) for a in v)
    if len(v) != f.nvars:
        raise DimensionMismatch("weight vector and polynomial dimensions differ")
    weights = {e: sum(a * b for a, b in zip(e, v)) for e in f.terms}
    m = min(weights.values())
    face = {e: c for e, c in f.terms.items() if weights[e] == m}
    beta = min(face)
    U = unimodular_completion(v)
    Uinv = integer_inverse(U)
    edge = {}
    for e, c in face.items():
        coords = matvec(Uinv, [a - b for a, b in zip(e, beta)])
        assert coords[0] == 0
        edge[tuple(coords[1:])] = c
    d = f.nvars
    basis = tuple(tuple(U[i][j] for i in range(d)) for j in range(1, d))
    return FaceRestriction(
        normal=v,
        restricted_support=LatticeConfiguration(d, tuple(face)),
        shift=beta,
        edge_poly=LaurentPolynomial(edge, d - 1) if d > 1 else LaurentPolynomial.constant(face[beta], 1),
        face_poly=LaurentPolynomial._raw(face, d),
        perp_basis=basis,
    )


# --- substitution ----------------------------------------------------------------

def substitute(f: LaurentPolynomial, assignments: Mapping[int, LaurentPolynomial | int | Fraction]
               ) -> LaurentPolynomial:
    """Replace variable ``i`` by ``assignments[i]`` (same ring)."""
    subs = {}
    for i, s in assignments.items():
        if not isinstance(s, LaurentPolynomial):
            s = LaurentPolynomial.constant(s, f.nvars)
        if s.nvars != f.nvars:
            raise DimensionMismatch("substituted polynomial lives in a different ring")
        subs[i] = s
    cache: dict[tuple[int, int], LaurentPolynomial] = {}

    def power(i, k):
        if (i, k) not in cache:
            s = subs[i]
            if k < 0 and not s.is_monomial():
                raise NonInvertibleSubstitution(
                    f"negative power of variable {i} replaced by a non-monomial")
            cache[(i, k)] = s ** k
        return cache[(i, k)]

    out = LaurentPolynomial.zero(f.nvars)
    for e, c in f.terms.items():
        kept = tuple(0 if i in subs else k for i, k in enumerate(e))
        term = LaurentPolynomial.monomial(kept, c)
        for i, k in enumerate(e):
            if i in subs and k:
                term = term * power(i, k)
        out = out + term
    return out


# --- JSON ------------------------------------------------------------------------

def fraction_to_str(c) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def parse_fraction(s) -> Fraction:
    if isinstance(s, bool):
        raise InputError("booleans are not rationals")
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {s!r}") from exc
    raise InputError(f"not a rational: {s!r}")


def polynomial_to_json(f: LaurentPolynomial) -> dict:
    return {"d": f.nvars,
            "terms": [{"exp": list(e), "coeff": fraction_to_str(c)} for e, c in sorted(f.terms.items())]}


def polynomial_from_json(data: Mapping) -> LaurentPolynomial:
    try:
        d = int(data["d"])
        terms = {tuple(int(a) for a in t["exp"]): parse_fraction(t["coeff"]) for t in data["terms"]}
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed polynomial JSON: {exc}") from exc
    return LaurentPolynomial(terms, d)
