"""Reproduction suite: every worked example and quantitative claim, checked exactly.

Each check returns its expected and computed values; the runner times it,
compares against a runtime budget and collects a :class:`VerificationReport`.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import univariate as up
from .chasles_core import (
    ChaslesStructure,
    extra_point,
    extra_point_via_eliminant,
    family_pq,
    is_chasles_configuration,
    is_chasles_structure,
)
from .classifier import classify_planar_saturated_chasles
from .errors import ChaslesError, DegeneracyError, DegenerateConfiguration, InputError
from .lattice_geometry import (
    LatticeConfiguration,
    apply_unimodular,
    convex_hull,
    dimension,
    is_saturated,
    lattice_points,
    minkowski_sum,
    normalized_volume,
    pick_counts,
    random_unimodular,
)
from .polynomials import LaurentPolynomial, substitute, vanishing_space
from .resultants import discriminant, product_of_coordinates, sylvester_resultant
from .sampling import random_configuration, random_rational, random_torus_point
from .solver_numeric import count_torus_roots, random_system, solve_2d

# --- fixtures ------------------------------------------------------------------

CUBIC = LatticeConfiguration(2, [(i, j) for i in range(4) for j in range(4) if i + j <= 3])
TRIANGLE_ONE_INTERIOR = LatticeConfiguration(2, [(0, 0), (1, 1), (2, 1), (1, 2)])
OCTAD = LatticeConfiguration(3, [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 0, 0), (0, 2, 0),
                                 (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)])
NON_CHASLES = LatticeConfiguration(2, [(0, 0), (1, 2), (3, 1), (1, 1), (2, 1)])
UNIT_SQUARE = LatticeConfiguration(2, [(0, 0), (1, 0), (0, 1), (1, 1)])


def a_d(d: int) -> LatticeConfiguration:
    """``{0, e1, e2, e1 + e2, e3, 2 e3, e4, ..., ed}`` in ``Z^d``."""
    def e(*idx):
        v = [0] * d
        for i in idx:
            v[i] += 1
        return tuple(v)
    pts = [e(), e(0), e(1), e(0, 1), e(2), e(2, 2)] + [e(i) for i in range(3, d)]
    return LatticeConfiguration(d, pts)


def closed_form_extra_point(p1, p2) -> tuple[Fraction, Fraction]:
    """Third common zero for the one-interior-point triangle, in closed form."""
    (a1, b1), (a2, b2) = p1, p2
    a3 = -b1 * b2 * (a1 - a2) ** 2 / ((b1 - b2) * (a1 * b1 - a2 * b2))
    b3 = -a1 * a2 * (b1 - b2) ** 2 / ((a1 - a2) * (a1 * b1 - a2 * b2))
    return a3, b3


def r_x(k02, k01, k00, l02, l01, l00):
    """Constant coefficient of ``Res_y(F, G)`` for the monic-cubic basis (13 terms)."""
    return (k02 ** 3 * l00 ** 2 - k02 ** 2 * k01 * l01 * l00 + k02 * k01 ** 2 * l02 * l00
            + k02 ** 2 * k00 * l01 ** 2 - 2 * k02 ** 2 * k00 * l02 * l00
            - k02 * k01 * k00 * l02 * l01 + k02 * k00 ** 2 * l02 ** 2 - k01 ** 3 * l00
            + 3 * k02 * k01 * k00 * l00 + k01 ** 2 * k00 * l01 - 2 * k02 * k00 ** 2 * l01
            - k01 * k00 ** 2 * l02 + k00 ** 3)


def r_y(k20, k10, k00, l20, l10, l00):
    """Constant coefficient of ``Res_x(F, G)`` (the mirror of :func:`r_x`)."""
    return (k00 ** 2 * l20 ** 3 - k10 * k00 * l20 ** 2 * l10 + k20 * k00 * l20 * l10 ** 2
            + k10 ** 2 * l20 ** 2 * l00 - 2 * k20 * k00 * l20 ** 2 * l00
            - k20 * k10 * l20 * l10 * l00 + k20 ** 2 * l20 * l00 ** 2 - k00 * l10 ** 3
            + 3 * k00 * l20 * l10 * l00 + k10 * l10 ** 2 * l00 - 2 * k10 * l20 * l00 ** 2
            - k20 * l10 * l00 ** 2 + l00 ** 3)


# --- report --------------------------------------------------------------------

@dataclass
class Check:
    name: str
    anchor: str
    passed: bool
    expected: object
    computed: object
    runtime: float
    limit: float | None = None

    def to_json(self) -> dict:
        return {"name": self.name, "anchor": self.anchor,
                "status": "pass" if self.passed else "fail",
                "expected": _jsonable(self.expected), "computed": _jsonable(self.computed),
                "runtime": round(self.runtime, 3), "limit": self.limit}


def _jsonable(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"passed": self.passed, "checks": [c.to_json() for c in self.checks]}

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"{status}  {c.name:<28} {c.runtime:7.2f}s  [{c.anchor}]")
            if not c.passed:
                lines.append(f"      expected {_jsonable(c.expected)}, computed {_jsonable(c.computed)}")
        lines.append(f"{sum(c.passed for c in self.checks)}/{len(self.checks)} checks passed")
        return "\n".join(lines)


# --- checks ----------------------------------------------------------------------
# Each returns (expected, computed, passed).

def check_cubic_triangle(seed: int):
    vol = normalized_volume(CUBIC)
    rep = is_chasles_configuration(CUBIC)
    computed = {"points": len(CUBIC), "dim": dimension(CUBIC), "vol": vol, "chasles": rep.is_chasles}
    expected = {"points": 10, "dim": 2, "vol": 9, "chasles": True}
    return expected, computed, computed == expected


def closed_form_trials(seed: int, trials: int = 200):
    """Closed-form and collinearity comparison on random pairs.

    Returns ``(matches, collinear, degenerate, failures)``.
    """
    rng = random.Random(seed)
    S = ChaslesStructure.from_configuration(TRIANGLE_ONE_INTERIOR)
    matches = collinear = degenerate = 0
    failures = []
    for _ in range(trials):
        p1, p2 = random_torus_point(rng, 2), random_torus_point(rng, 2)
        (a1, b1), (a2, b2) = p1, p2
        if a1 == a2 or b1 == b2 or a1 * b1 == a2 * b2:
            degenerate += 1
            continue
        expected = closed_form_extra_point(p1, p2)
        try:
            got = tuple(extra_point(S, [p1, p2]).point)
        except ChaslesError as exc:
            failures.append((p1, p2, str(exc)))
            continue
        if got == expected:
            matches += 1
        else:
            failures.append((p1, p2, got))
        (a3, b3) = got
        if (a2 - a1) * (b3 - b1) - (b2 - b1) * (a3 - a1) == 0:
            collinear += 1
    return matches, collinear, degenerate, failures


def check_closed_form(seed: int):
    matches, _, degenerate, failures = closed_form_trials(seed)
    return ({"matches": 200 - degenerate, "failures": 0},
            {"matches": matches, "degenerate_skipped": degenerate, "failures": len(failures)},
            not failures and matches == 200 - degenerate)


def check_collinearity(seed: int):
    matches, collinear, degenerate, failures = closed_form_trials(seed)
    return 200 - degenerate, collinear, collinear == 200 - degenerate and not failures


def _resultant_identity(seed: int, formula, build):
    rng = random.Random(seed)
    signs = set()
    for _ in range(60):
        c = [random_rational(rng) for _ in range(6)]
        res = Fraction(sylvester_resultant(*build(c)))
        ref = formula(*c)
        if res == ref:
            signs.add(1)
        elif res == -ref:
            signs.add(-1)
        else:
            signs.add(None)
    return {"trials": 60, "signs": [1]}, {"trials": 60, "signs": sorted(signs, key=str)}, \
        len(signs) == 1 and None not in signs


def check_rx(seed: int):
    # F(0, y) = k02 y^2 + k01 y + k00 and G(0, y) = y^3 + l02 y^2 + l01 y + l00
    return _resultant_identity(seed, r_x, lambda c: ([c[2], c[1], c[0]], [c[5], c[4], c[3], 1]))


def check_ry(seed: int):
    # F(x, 0) = x^3 + k20 x^2 + k10 x + k00 and G(x, 0) = l20 x^2 + l10 x + l00
    return _resultant_identity(seed, r_y, lambda c: ([c[2], c[1], c[0], 1], [c[5], c[4], c[3]]))


def check_ninth_point_formula(seed: int, draws: int = 5):
    """``a * a1...a8 * L_x = +-R_x`` and ``b * b1...b8 * L_y = +-R_y`` for the monic-cubic basis.

    ``L_x`` and ``L_y`` are the leading coefficients of the two eliminants,
    i.e. resultants of the cubic top forms; they are not 1 in general, so the
    ninth point needs them in the denominator.
    """
    rng = random.Random(seed)
    S = ChaslesStructure.from_configuration(CUBIC)
    ok = 0
    done = 0
    while done < draws:
        pts = [random_torus_point(rng, 2) for _ in range(8)]
        try:
            res = extra_point(S, pts)
        except ChaslesError:
            continue
        done += 1
        F, G = res.basis
        if F.coefficient((0, 3)) != 0:
            F, G = G, F
        F, G = F / F.coefficient((3, 0)), G / G.coefficient((0, 3))
        k, lam = F.coefficient, G.coefficient
        a, b = res.point
        pa = pb = Fraction(1)
        for p in pts:
            pa *= p[0]
            pb *= p[1]
        rx = r_x(k((0, 2)), k((0, 1)), k((0, 0)), lam((0, 2)), lam((0, 1)), lam((0, 0)))
        ry = r_y(k((2, 0)), k((1, 0)), k((0, 0)), lam((2, 0)), lam((1, 0)), lam((0, 0)))
        lx = sylvester_resultant([1, k((2, 1)), k((1, 2))], [0, lam((2, 1)), lam((1, 2)), 1])
        ly = sylvester_resultant([0, k((1, 2)), k((2, 1)), 1], [1, lam((1, 2)), lam((2, 1))])
        if abs(a * pa * lx) == abs(rx) and abs(b * pb * ly) == abs(ry):
            ok += 1
    return draws, ok, ok == draws


def check_classical_ninth_point(seed: int, draws: int = 25, tol: float = 1e-8):
    rng = random.Random(seed)
    S = ChaslesStructure.from_configuration(CUBIC)
    certified = matched = skipped = 0
    worst = 0.0
    while certified < draws:
        pts = [random_torus_point(rng, 2) for _ in range(8)]
        try:
            res = extra_point(S, pts)
        except (InputError, DegeneracyError):
            skipped += 1
            continue
        if any(f.evaluate(res.point) != 0 for f in res.basis):
            break
        certified += 1
        roots = solve_2d(*res.basis)
        _, dist = roots.nearest(res.point)
        worst = max(worst, dist)
        if dist <= tol:
            matched += 1
    return ({"certified": draws, "matched": draws},
            {"certified": certified, "matched": matched, "skipped": skipped, "worst_distance": worst},
            certified == draws and matched == draws)


def check_family(seed: int):
    bad = []
    for n in range(1, 21):
        S = family_pq(n)
        rep = is_chasles_structure(S)
        P, Q = S.configurations
        area = normalized_volume(lattice_points(minkowski_sum(convex_hull(P), convex_hull(Q))))
        if not (rep.is_chasles and rep.mixed_volume == 2 * n + 2 and len(P) == 2 * n + 2
                and len(Q) == 2 * n + 2 and area == 4 * (2 * n + 1)):
            bad.append(n)
    return [], bad, not bad


def classification_counts() -> dict:
    return {"box 4, 6 vertices": len(classify_planar_saturated_chasles(4, 6)),
            "box 3, 6 vertices": len(classify_planar_saturated_chasles(3, 6)),
            "box 4, 8 vertices": len(classify_planar_saturated_chasles(4, 8))}


def check_classification(seed: int):
    counts = classification_counts()
    expected = {k: 16 for k in counts}
    return expected, counts, counts == expected


def check_octad(seed: int):
    rep = is_chasles_configuration(OCTAD)
    computed = {"chasles": rep.is_chasles, "N": rep.N, "vol": rep.volume, "saturated": rep.saturated}
    expected = {"chasles": True, "N": 7, "vol": 8, "saturated": True}
    return expected, computed, computed == expected


def check_octad_extra_point(seed: int):
    rng = random.Random(seed)
    S = ChaslesStructure.from_configuration(OCTAD)
    pts = [random_torus_point(rng, 3, bound=9, max_den=5) for _ in range(7)]
    res = extra_point_via_eliminant(S, pts)
    cert = all(f.evaluate(res.point) == 0 for f in res.basis) and tuple(res.point) not in pts
    return True, cert, cert


def check_a_d(seed: int):
    computed = {}
    for d in range(3, 7):
        A = a_d(d)
        rep = is_chasles_configuration(A)
        computed[d] = (rep.is_chasles, is_saturated(A), normalized_volume(A), len(A))
    expected = {d: (True, True, 4, d + 3) for d in range(3, 7)}
    return expected, computed, computed == expected


def nonrational_quotient() -> tuple[LaurentPolynomial, LaurentPolynomial]:
    """Quotient ``q`` and its discriminant for the five-point triangle.

    Vanishing space at ``(1,1), (2,4), (t,t^2)`` with ``t`` adjoined as a
    third variable; the basis element without a ``y^2`` term, restricted to
    ``y = x^2``, is divided by ``(x-1)(x-2)(x-t)`` and normalized to a
    primitive polynomial over ``Z[t]`` with positive leading coefficient.
    """
    x, y, t = LaurentPolynomial.variables(3)
    basis = vanishing_space(NON_CHASLES, [(1, 1), (2, 4), (t, t * t)], nvars=3)
    f2 = next(f for f in basis if f.degree(1) == 1)
    q = substitute(f2, {1: x * x}) / ((x - 1) * (x - 2) * (x - t))
    coeffs = q.coefficients_in(0)
    g: list[Fraction] = []
    for c in coeffs.values():
        g = up.poly_gcd(g, c.univariate_coefficients(2))
    q = q / LaurentPolynomial.from_univariate(g, 2, 3)
    q = q / q.content()
    top = q.coefficients_in(0)[max(q.coefficients_in(0))]
    if top.leading_term()[1] < 0:
        q = -q
    coeffs = q.coefficients_in(0)
    zero = LaurentPolynomial.zero(3)
    disc = discriminant([coeffs.get(k, zero) for k in range(max(coeffs) + 1)])
    return q, disc


def check_non_chasles(seed: int):
    t = LaurentPolynomial.variable(2, 3)
    rep = is_chasles_configuration(NON_CHASLES)
    q, disc = nonrational_quotient()
    target = -4 * t ** 2 * (12 + 12 * t + 19 * t ** 2)
    return ({"chasles": False, "discriminant": str(target)},
            {"chasles": rep.is_chasles, "discriminant": str(disc)},
            not rep.is_chasles and disc == target)


BKK_FAMILIES = {
    "triangle-one-interior": lambda: ChaslesStructure.from_configuration(TRIANGLE_ONE_INTERIOR),
    "quadrangles-n2": lambda: family_pq(2),
    "unit-squares": lambda: ChaslesStructure((UNIT_SQUARE, UNIT_SQUARE), (1, 1)),
}


def check_bkk(seed: int, trials: int = 50):
    computed = {}
    ok = True
    for name, make in BKK_FAMILIES.items():
        st = count_torus_roots(make(), trials, seed)
        computed[name] = {"expected": st.expected, "mismatches": len(st.mismatches),
                          "flagged_rate": st.flagged_rate}
        ok &= not st.mismatches and st.flagged_rate < 0.10
    return {"mismatches": 0, "flagged_rate": "< 0.10"}, computed, ok


def product_oracle_errors(seed: int, systems: int = 50) -> list[float]:
    rng = random.Random(seed)
    families = [BKK_FAMILIES["triangle-one-interior"](), family_pq(2), family_pq(3),
                BKK_FAMILIES["unit-squares"](), ChaslesStructure.from_configuration(CUBIC)]
    errors = []
    while len(errors) < systems:
        S = families[len(errors) % len(families)]
        F, G = random_system(S, rng)
        try:
            exact = [abs(float(product_of_coordinates([F, G], i).value)) for i in range(2)]
            roots = solve_2d(F, G)
        except ChaslesError:
            continue
        errors.append(max(abs(abs(roots.coordinate_product(i)) - exact[i]) / exact[i] for i in range(2)))
    return errors


def check_product_of_roots(seed: int):
    errs = product_oracle_errors(seed)
    return "<= 1e-6", max(errs), max(errs) <= 1e-6


def invariance_failures(seed: int, pairs: int = 500) -> list:
    rng = random.Random(seed)
    failures = []
    for k in range(pairs):
        d = 2 if k % 2 == 0 else 3
        A = random_configuration(rng, d, rng.randint(d + 1, 8))
        T = random_unimodular(d, rng)
        B = apply_unimodular(A, T)
        same = (normalized_volume(A) == normalized_volume(B)
                and is_saturated(A) == is_saturated(B))
        if d == 2 and dimension(A) == 2:
            same &= pick_counts(A) == pick_counts(B)
        try:
            va = is_chasles_configuration(A).is_chasles
        except DegenerateConfiguration:
            va = None
        try:
            vb = is_chasles_configuration(B).is_chasles
        except DegenerateConfiguration:
            vb = None
        if not same or va != vb:
            failures.append((A.points, T))
    return failures


def check_invariance(seed: int):
    fails = invariance_failures(seed)
    return 0, len(fails), not fails


@dataclass(frozen=True)
class CheckSpec:
    name: str
    anchor: str
    run: Callable
    limit: float | None


CHECKS = [
    CheckSpec("cubic-triangle", "cubic triangle: 10 points, vol 9, Chasles", check_cubic_triangle, None),
    CheckSpec("closed-form", "triangle with one interior point: closed form for (a3, b3)", check_closed_form, 2.0),
    CheckSpec("collinearity", "triangle with one interior point: the three zeros are collinear",
              check_collinearity, 2.0),
    CheckSpec("Rx", "classical ninth point: 13-term constant coefficient R_x", check_rx, 1.0),
    CheckSpec("Ry", "classical ninth point: mirrored constant coefficient R_y", check_ry, 1.0),
    CheckSpec("ninth-point-formula", "classical ninth point: a = R_x / (a1...a8 L_x) up to sign",
              check_ninth_point_formula, None),
    CheckSpec("classical-ninth-point", "classical ninth point: exact certificate and numeric agreement",
              check_classical_ninth_point, 10.0),
    CheckSpec("quadrangle-family", "quadrangle pairs P_n, Q_n: mvol 2n+2, area 4(2n+1)", check_family, 2.0),
    CheckSpec("classification", "saturated planar configurations: sixteen classes", check_classification, 60.0),
    CheckSpec("octad", "quadrics in 3-space: vol 8, N = 7", check_octad, 1.0),
    CheckSpec("octad-extra-point", "quadrics in 3-space: eighth point certified exactly",
              check_octad_extra_point, None),
    CheckSpec("saturated-A_d", "A_d for d = 3..6: saturated, vol 4, d+3 points", check_a_d, 1.0),
    CheckSpec("non-chasles", "five-point triangle: not Chasles, discriminant -4t^2(12+12t+19t^2)",
              check_non_chasles, 2.0),
    CheckSpec("bkk-counts", "root counts equal mixed volumes", check_bkk, 60.0),
    CheckSpec("product-of-roots", "coordinate products from directional resultants", check_product_of_roots, 60.0),
    CheckSpec("unimodular-invariance", "volume, saturation, Pick counts, verdict are invariant",
              check_invariance, None),
]


def run_checks(only: list[str] | None = None, seed: int = 0) -> VerificationReport:
    specs = CHECKS if not only else [c for c in CHECKS if c.name in set(only)]
    if only and len(specs) != len(set(only)):
        known = {c.name for c in CHECKS}
        raise InputError(f"unknown checks: {sorted(set(only) - known)}")
    report = VerificationReport()
    for spec in specs:
        start = time.perf_counter()
        try:
            expected, computed, passed = spec.run(seed)
        except ChaslesError as exc:
            expected, computed, passed = "no error", f"{type(exc).__name__}: {exc}", False
        runtime = time.perf_counter() - start
        if spec.limit is not None and runtime > spec.limit:
            passed = False
        report.checks.append(Check(spec.name, spec.anchor, passed, expected, computed, runtime, spec.limit))
    return report
