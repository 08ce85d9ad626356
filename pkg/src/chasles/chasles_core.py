"""Chasles configurations and structures, and the extra-point map.

Given ``N`` generic torus points, each configuration ``A_i`` of a Chasles
structure carries a ``k_i``-dimensional space of polynomials vanishing at the
points; together these ``d`` polynomials have exactly one more common torus
zero.  :func:`extra_point` finds it from coordinate products of all roots
(directional resultants) divided by the known coordinates, then settles the
sign by exact evaluation.  :func:`extra_point_via_eliminant` gets the same
point by elimination and exact deflation of the known roots.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import univariate as up
from .errors import (
    DegenerateConfiguration,
    DimensionMismatch,
    ExtraneousFactorAmbiguity,
    FaceSystemDegenerate,
    InputError,
    PositiveDimensional,
    RationalReconstructionFailure,
    SignResolutionFailure,
)
from .lattice_geometry import (
    LatticeConfiguration,
    convex_hull,
    dimension,
    is_saturated,
    lattice_points,
    mixed_volume,
    normalized_volume,
)
from .polynomials import (
    LaurentPolynomial,
    RationalPoint,
    as_point,
    fraction_to_str,
    substitute,
    vanishing_space,
)
from .resultants import directional_resultants, product_of_coordinates, resultant


@dataclass(frozen=True)
class ChaslesStructure:
    """Configurations ``A_1..A_l`` in ``Z^d`` with a partition ``d = k_1 + ... + k_l``.

    Construction only checks shapes; whether the counting conditions hold is
    decided by :func:`is_chasles_structure`.
    """

    configurations: tuple[LatticeConfiguration, ...]
    partition: tuple[int, ...]

    def __post_init__(self):
        confs = tuple(c if isinstance(c, LatticeConfiguration) else LatticeConfiguration.from_points(c)
                      for c in self.configurations)
        object.__setattr__(self, "configurations", confs)
        object.__setattr__(self, "partition", tuple(int(k) for k in self.partition))
        if not confs or len(confs) != len(self.partition):
            raise InputError("need one partition entry per configuration")
        if any(k < 1 for k in self.partition):
            raise InputError("partition entries must be positive")
        if len({c.dim_ambient for c in confs}) != 1:
            raise DimensionMismatch("configurations live in different ambient spaces")

    @classmethod
    def from_configuration(cls, A) -> "ChaslesStructure":
        A = A if isinstance(A, LatticeConfiguration) else LatticeConfiguration.from_points(A)
        return cls((A,), (A.dim_ambient,))

    @property
    def d(self) -> int:
        return self.configurations[0].dim_ambient

    @property
    def N(self) -> int:
        return len(self.configurations[0]) - self.partition[0]

    def mixed_volume(self) -> int:
        return mixed_volume(list(zip(self.configurations, self.partition)))


@dataclass(frozen=True)
class ChaslesReport:
    is_chasles: bool
    N: int | None
    volume: int | None = None
    mixed_volume: int | None = None
    saturated: bool | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.is_chasles


def is_chasles_configuration(A) -> ChaslesReport:
    """Decide ``|A| + 1 == vol(A) + d`` for a full-dimensional configuration."""
    A = A if isinstance(A, LatticeConfiguration) else LatticeConfiguration.from_points(A)
    d = A.dim_ambient
    if dimension(A) != d:
        raise DegenerateConfiguration(f"configuration has dimension {dimension(A)} < {d}")
    vol = normalized_volume(A)
    ok = len(A) + 1 == vol + d
    reason = "" if ok else f"|A| + 1 = {len(A) + 1} but vol + d = {vol + d}"
    return ChaslesReport(ok, vol - 1, volume=vol, saturated=is_saturated(A), reason=reason)


def is_chasles_structure(configs, partition=None) -> ChaslesReport:
    """Decide the Chasles structure conditions: common ``N`` and mixed volume ``N + 1``."""
    if isinstance(configs, ChaslesStructure):
        structure = configs
    else:
        structure = ChaslesStructure(tuple(configs), tuple(partition))
    d = structure.d
    if sum(structure.partition) != d:
        return ChaslesReport(False, None, reason=f"partition sums to {sum(structure.partition)}, not {d}")
    ns = {len(A) - k for A, k in zip(structure.configurations, structure.partition)}
    if len(ns) != 1:
        return ChaslesReport(False, None, reason=f"|A_i| - k_i not constant: {sorted(ns)}")
    N = ns.pop()
    if N < 1:
        return ChaslesReport(False, N, reason="N must be positive")
    mv = structure.mixed_volume()
    ok = mv == N + 1
    return ChaslesReport(ok, N, mixed_volume=mv,
                         reason="" if ok else f"mixed volume {mv} != N + 1 = {N + 1}")


def family_pq(n: int) -> ChaslesStructure:
    """The pair of lattice quadrangles ``(P_n, Q_n)`` with partition ``(1, 1)``."""
    if n < 1:
        raise InputError("n must be positive")
    P = lattice_points(convex_hull([(0, 0), (0, n), (1, n + 1), (1, 1)]))
    Q = lattice_points(convex_hull([(1, 0), (0, 1), (0, n + 1), (1, n)]))
    return ChaslesStructure((P, Q), (1, 1))


def _as_structure(structure) -> ChaslesStructure:
    if isinstance(structure, ChaslesStructure):
        return structure
    return ChaslesStructure.from_configuration(structure)


# --- extra point ---------------------------------------------------------------

@dataclass(frozen=True)
class ExtraPointResult:
    point: RationalPoint
    certificates: tuple[Fraction, ...]
    sign_pattern: tuple[int, ...]
    basis: tuple[LaurentPolynomial, ...]
    method: str
    diagnostics: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {
            "point": [fraction_to_str(c) for c in self.point],
            "certificates": [fraction_to_str(c) for c in self.certificates],
            "diagnostics": {"method": self.method, **self.diagnostics},
        }


def structure_basis(structure, points: Sequence) -> list[LaurentPolynomial]:
    """The ``d`` polynomials: a basis of each vanishing space, concatenated."""
    structure = _as_structure(structure)
    pts = [as_point(p) for p in points]
    if len(pts) != structure.N:
        raise InputError(f"structure needs N = {structure.N} points, got {len(pts)}")
    for p in pts:
        if len(p) != structure.d:
            raise DimensionMismatch("point dimension differs from the structure")
        if any(c == 0 for c in p):
            raise InputError(f"point {p} is not in the torus")
    basis = []
    for A, k in zip(structure.configurations, structure.partition):
        space = vanishing_space(A, pts)
        if len(space) != k:
            raise InputError(f"vanishing space has dimension {len(space)}, expected {k}")
        basis.extend(space)
    return basis


def _mixed_basis(structure: ChaslesStructure, basis: list[LaurentPolynomial],
                 rng: random.Random) -> list[LaurentPolynomial]:
    """Replace each block of the basis by random unitriangular combinations."""
    out = []
    start = 0
    for k in structure.partition:
        block = basis[start:start + k]
        for i in range(k):
            poly = block[i]
            for j in range(k):
                if j != i:
                    poly = poly + rng.randint(1, 9) * block[j]
            out.append(poly)
        start += k
    return out


def _certify(basis, point) -> tuple[Fraction, ...] | None:
    vals = tuple(Fraction(f.evaluate(point)) for f in basis)
    return vals if all(v == 0 for v in vals) else None


def extra_point(structure, points: Sequence, retries: int = 3) -> ExtraPointResult:
    """Extra common zero from products of coordinates of all roots (planar only).

    For each coordinate the product over all ``N + 1`` roots comes from the
    directional resultants; dividing by the known coordinates leaves the
    magnitude of the new one.  The sign combination is chosen by exact
    evaluation of every basis polynomial.
    """
    structure = _as_structure(structure)
    if structure.d != 2:
        raise DimensionMismatch("the resultant-product path is implemented for d = 2 only")
    pts = [as_point(p) for p in points]
    basis = structure_basis(structure, pts)
    rng = random.Random(0)
    system = basis
    for attempt in range(retries + 1):
        try:
            records = directional_resultants(system)
            break
        except FaceSystemDegenerate:
            if attempt == retries or max(structure.partition) == 1:
                raise
            system = _mixed_basis(structure, basis, rng)
    magnitudes = []
    for i in range(2):
        prod = product_of_coordinates(system, i, records).value
        known = Fraction(1)
        for p in pts:
            known *= p[i]
        magnitudes.append(prod / known)
    hits = []
    for signs in itertools.product((1, -1), repeat=2):
        cand = tuple(s * m for s, m in zip(signs, magnitudes))
        if any(c == 0 for c in cand):
            continue
        cert = _certify(basis, cand)
        if cert is not None:
            hits.append((cand, signs, cert))
    if len(hits) != 1:
        raise SignResolutionFailure(
            f"{len(hits)} signed candidates vanish on the basis; input is not generic "
            "or the extra point is a multiple root")
    cand, signs, cert = hits[0]
    if cand in {tuple(p) for p in pts}:
        raise SignResolutionFailure("extra point coincides with an input point")
    return ExtraPointResult(RationalPoint(cand), cert, signs, tuple(basis), "directional-resultants",
                            {"records": [r.to_json() for r in records],
                             "magnitudes": [fraction_to_str(m) for m in magnitudes]})


# --- eliminant path ----------------------------------------------------------------

def _univariate(f: LaurentPolynomial, var: int) -> list[Fraction]:
    return f.clear_negative_exponents().univariate_coefficients(var)


def _eliminate_to(polys: list[LaurentPolynomial], keep: int, others: list[int],
                  max_pairs: int = 3) -> list[list[Fraction]]:
    """Univariate eliminants in variable ``keep`` from pairwise resultants."""
    level = [p.clear_negative_exponents() for p in polys if p]
    for var in reversed(others):
        active = [p for p in level if var in p.variables_used()]
        passive = [p for p in level if var not in p.variables_used()]
        nxt = []
        for p, q in itertools.islice(itertools.combinations(active, 2), max_pairs):
            r = resultant(p, q, var)
            if r:
                nxt.append(r.clear_negative_exponents())
        level = passive + nxt
        if not level:
            raise PositiveDimensional("all resultants vanish identically")
    return [_univariate(p, keep) for p in level if p]


def _rational_torus_solutions(polys: list[LaurentPolynomial], variables: list[int],
                              deflate: Sequence[Fraction] = ()) -> list[dict[int, Fraction]]:
    """All rational torus zeros of ``polys`` (exact), by elimination and back-substitution.

    Each step eliminates every variable but the first, takes the gcd of the
    resulting univariate eliminants, divides out the linear factors of
    ``deflate`` (known coordinates), finds rational roots and substitutes.
    Every returned solution still has to be certified by the caller.
    """
    first, rest = variables[0], variables[1:]
    elims = _eliminate_to(polys, first, rest)
    g = elims[0]
    for e in elims[1:]:
        g = up.poly_gcd(g, e)
    g = up.strip_zero_roots(g)
    if not g:
        raise PositiveDimensional("eliminant vanishes identically")
    for a in deflate:
        q, r = up.divmod_poly(g, [-Fraction(a), Fraction(1)])
        if not r and q:
            g = q
    if up.degree(g) <= 0:
        values = []
    elif up.degree(g) == 1:
        values = [-g[0] / g[1]]
    else:
        values = up.rational_roots(g)
    out = []
    for val in values:
        if not rest:
            out.append({first: val})
            continue
        reduced = [substitute(p, {first: val}) for p in polys]
        reduced = [p for p in reduced if p]
        if any(p.is_constant() for p in reduced):
            continue
        for sol in _rational_torus_solutions(reduced, rest):
            out.append({first: val, **sol})
    return out


def extra_point_via_eliminant(structure, points: Sequence) -> ExtraPointResult:
    """Extra common zero by elimination, exact deflation of the known points and certification.

    Works for ``d = 2`` and ``d = 3``.  After dividing out the known
    coordinates, a linear residual is read off directly; otherwise rational
    roots are recovered numerically (continued fractions) and only exactly
    certified points are kept.
    """
    structure = _as_structure(structure)
    d = structure.d
    if d not in (2, 3):
        raise DimensionMismatch("the eliminant path supports d = 2 and d = 3")
    pts = [as_point(p) for p in points]
    basis = structure_basis(structure, pts)
    known = {tuple(p) for p in pts}
    sols = _rational_torus_solutions(basis, list(range(d)), deflate=[p[0] for p in pts])
    found = []
    for sol in sols:
        cand = tuple(sol[i] for i in range(d))
        if any(c == 0 for c in cand) or cand in known:
            continue
        cert = _certify(basis, cand)
        if cert is not None and cand not in [f[0] for f in found]:
            found.append((cand, cert))
    if not found:
        # the extra point may share its first coordinate with an input point
        sols = _rational_torus_solutions(basis, list(range(d)))
        for sol in sols:
            cand = tuple(sol[i] for i in range(d))
            if any(c == 0 for c in cand) or cand in known:
                continue
            cert = _certify(basis, cand)
            if cert is not None and cand not in [f[0] for f in found]:
                found.append((cand, cert))
    if not found:
        exc = RationalReconstructionFailure if d == 3 else ExtraneousFactorAmbiguity
        raise exc("no certified rational extra point found")
    if len(found) > 1:
        raise ExtraneousFactorAmbiguity(f"{len(found)} certified candidates for the extra point")
    cand, cert = found[0]
    return ExtraPointResult(RationalPoint(cand), cert, tuple(1 if c > 0 else -1 for c in cand),
                            tuple(basis), "eliminant", {"candidates": len(sols)})
