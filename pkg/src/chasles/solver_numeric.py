"""Numeric oracle: univariate complex roots and planar torus-root solving.

This module is advisory: it validates the exact machinery (root counts,
coordinate products, extra points) against floating-point solutions.
Roots are found from the exact resultant ``Res_y(F, G)``, paired with
``y``-roots by back-substitution and polished by Newton's method in mpmath.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from . import univariate as up
from .errors import ChaslesError, DimensionMismatch, IllConditioned, PositiveDimensional
from .lattice_geometry import LatticeConfiguration
from .polynomials import LaurentPolynomial
from .resultants import resultant

DEFAULT_TOL = 1e-10
DEFAULT_CLUSTER_TOL = 1e-7
COEFF_RANGE = 10 ** 4
SCREEN_TOL = 1e-6


@dataclass(frozen=True)
class TorusRoot:
    coordinates: tuple[complex, ...]
    multiplicity: int
    residual: float

    def to_json(self) -> dict:
        return {"coords": [{"re": z.real, "im": z.imag} for z in self.coordinates],
                "mult": self.multiplicity, "residual": self.residual}


@dataclass(frozen=True)
class TorusRootList:
    roots: tuple[TorusRoot, ...]
    tolerance: float
    diagnostics: dict = field(default_factory=dict, compare=False)

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    @property
    def total_multiplicity(self) -> int:
        return sum(r.multiplicity for r in self.roots)

    def coordinate_product(self, i: int) -> complex:
        out = complex(1)
        for r in self.roots:
            out *= r.coordinates[i] ** r.multiplicity
        return out

    def nearest(self, point: Sequence) -> tuple[TorusRoot, float]:
        """Root closest to ``point`` (max-norm distance, relative to the point's size)."""
        target = [complex(float(c)) for c in point]
        scale = max(1.0, max(abs(c) for c in target))
        best = min(self.roots, key=lambda r: max(abs(a - b) for a, b in zip(r.coordinates, target)))
        dist = max(abs(a - b) for a, b in zip(best.coordinates, target)) / scale
        return best, dist

    def to_json(self) -> dict:
        return {"tolerance": self.tolerance, "roots": [r.to_json() for r in self.roots],
                "total_multiplicity": self.total_multiplicity}


def _cluster(values: Sequence[complex], tol: float) -> list[tuple[complex, int]]:
    clusters: list[list[complex]] = []
    for z in values:
        for c in clusters:
            if abs(z - c[0]) <= tol * max(1.0, abs(c[0])):
                c.append(z)
                break
        else:
            clusters.append([z])
    return [(complex(np.mean(c)), len(c)) for c in clusters]


def _float_coeffs(coeffs: Sequence) -> np.ndarray:
    """Coefficients scaled by their largest magnitude, highest degree first."""
    arr = [complex(c) if not isinstance(c, Fraction) else float(c) for c in coeffs]
    big = max(abs(c) for c in arr)
    if not np.isfinite(big) or big == 0:
        raise IllConditioned("coefficients overflow double precision", condition=float("inf"))
    return np.array(arr[::-1]) / big


def univariate_roots(coeffs: Sequence, tol: float = DEFAULT_CLUSTER_TOL,
                     polish: bool = True) -> list[tuple[complex, int]]:
    """Complex roots of a polynomial (coefficients by increasing degree) with multiplicities.

    Companion-matrix eigenvalues (numpy), optionally Newton-polished in mpmath
    against the exact coefficients, then merged into clusters of relative
    width ``tol``.
    """
    exact = all(isinstance(c, (int, Fraction)) for c in coeffs)
    f = up.trim(coeffs) if exact else list(coeffs)
    while f and f[-1] == 0:
        f.pop()
    if not f:
        raise ValueError("roots of the zero polynomial")
    if len(f) == 1:
        return []
    arr = _float_coeffs(f)
    lead = abs(arr[0])
    if lead < 1e-14:
        raise IllConditioned("leading coefficient negligible after scaling", condition=1 / max(lead, 1e-300))
    approx = np.roots(arr)
    if not np.all(np.isfinite(approx)):
        raise IllConditioned("non-finite eigenvalues", condition=float("inf"))
    if polish:
        approx = [_newton_1d(f, z) for z in approx]
    return _cluster(list(approx), tol)


def _newton_1d(f: Sequence, z: complex, steps: int = 30) -> complex:
    with mpmath.workdps(40):
        cs = [mpmath.mpmathify(c if not isinstance(c, Fraction) else mpmath.mpf(c.numerator) / c.denominator)
              for c in f]
        w = mpmath.mpc(z)
        for _ in range(steps):
            val = mpmath.polyval(cs[::-1], w)
            der = mpmath.polyval([k * c for k, c in enumerate(cs)][1:][::-1], w)
            if der == 0:
                break
            step = val / der
            w_new = w - step
            if abs(step) > 0.1 * max(1, abs(w)):
                break  # wandering off; keep the eigenvalue estimate
            w = w_new
            if abs(step) <= mpmath.mpf(10) ** -30 * max(1, abs(w)):
                break
        return complex(w)


def scaled_residual(f: LaurentPolynomial, point: Sequence[complex]) -> float:
    """``|f(p)| / sum |c_u p^u|``: a residual that does not depend on coefficient size."""
    val = f.evaluate_complex(point)
    scale = f.abs_scale(point)
    return abs(val) / scale if scale else abs(val)


def _newton_2d(F: LaurentPolynomial, G: LaurentPolynomial, p: tuple[complex, complex],
               steps: int = 30) -> tuple[complex, complex]:
    dF = [F.derivative(0), F.derivative(1)]
    dG = [G.derivative(0), G.derivative(1)]
    x, y = p
    for _ in range(steps):
        pt = (x, y)
        r = np.array([F.evaluate_complex(pt), G.evaluate_complex(pt)])
        J = np.array([[dF[0].evaluate_complex(pt), dF[1].evaluate_complex(pt)],
                      [dG[0].evaluate_complex(pt), dG[1].evaluate_complex(pt)]])
        try:
            delta = np.linalg.solve(J, r)
        except np.linalg.LinAlgError:
            break
        if not np.all(np.isfinite(delta)) or np.max(np.abs(delta)) > 0.1 * max(1.0, abs(x), abs(y)):
            break
        x, y = x - delta[0], y - delta[1]
        if np.max(np.abs(delta)) <= 1e-15 * max(1.0, abs(x), abs(y)):
            break
    return complex(x), complex(y)


def solve_2d(F: LaurentPolynomial, G: LaurentPolynomial, tol: float = DEFAULT_TOL,
             cluster_tol: float = DEFAULT_CLUSTER_TOL) -> TorusRootList:
    """All common roots of ``F`` and ``G`` in ``(C*)^2`` with multiplicities.

    ``tol`` bounds the scaled residual of every returned root; roots within
    ``cluster_tol`` (relative) are merged and their count is the multiplicity.
    """
    if F.nvars != 2 or G.nvars != 2:
        raise DimensionMismatch("solve_2d takes two bivariate polynomials")
    F = F.clear_negative_exponents()
    G = G.clear_negative_exponents()
    R = resultant(F, G, 1)
    if not R:
        raise PositiveDimensional("Res_y(F, G) vanishes identically")
    rx = up.strip_zero_roots(R.clear_negative_exponents().univariate_coefficients(0))
    if len(rx) <= 1:
        return TorusRootList((), tol, {"resultant_degree": 0})
    xs = univariate_roots(rx, cluster_tol)
    Fy = F.coefficients_in(1)
    found: list[tuple[complex, complex]] = []
    rejected = 0
    for x0, mx in xs:
        if abs(x0) <= cluster_tol:
            continue
        fy = _specialize(F, x0)
        gy = _specialize(G, x0)
        base = fy if _degree(fy) >= 1 else gy
        if _degree(base) < 1:
            rejected += 1
            continue
        accepted = []
        for y0, my in _cluster(list(np.roots(_float_coeffs(base))), cluster_tol):
            if abs(y0) <= cluster_tol * max(1.0, abs(x0)):
                continue
            # screen before polishing: Newton from a spurious y would land on a true root
            if scaled_residual(G, (x0, y0)) > SCREEN_TOL or scaled_residual(F, (x0, y0)) > SCREEN_TOL:
                continue
            p = _newton_2d(F, G, (x0, y0))
            if max(scaled_residual(F, p), scaled_residual(G, p)) < max(tol, 1e3 * cluster_tol):
                accepted.append((p, my))
        if not accepted:
            rejected += 1
        # one surviving y: the x-multiplicity is the root multiplicity
        if len(accepted) == 1:
            found.extend([accepted[0][0]] * mx)
        else:
            for p, my in accepted:
                found.extend([p] * min(my, mx))
    roots = []
    for p, m in _cluster_points(found, cluster_tol):
        res = max(scaled_residual(F, p), scaled_residual(G, p))
        if res >= tol and m == 1:
            raise IllConditioned(f"root {p} has residual {res:.2e} after polishing", condition=res / tol)
        roots.append(TorusRoot(p, m, res))
    roots.sort(key=lambda r: (round(r.coordinates[0].real, 9), round(r.coordinates[0].imag, 9),
                              round(r.coordinates[1].real, 9), round(r.coordinates[1].imag, 9)))
    return TorusRootList(tuple(roots), tol, {"resultant_degree": len(rx) - 1,
                                             "x_clusters": len(xs), "rejected_x": rejected,
                                             "y_terms": len(Fy)})


def _degree(coeffs: list[complex]) -> int:
    big = max((abs(c) for c in coeffs), default=0.0)
    d = len(coeffs) - 1
    while d >= 0 and abs(coeffs[d]) <= 1e-12 * big:
        d -= 1
    return d


def _specialize(f: LaurentPolynomial, x0: complex) -> list[complex]:
    """Coefficient list in ``y`` (increasing degree) of ``f(x0, y)``."""
    by_y = f.coefficients_in(1)
    top = max(by_y)
    out = [0j] * (top + 1)
    for k, c in by_y.items():
        out[k] = c.evaluate_complex((x0, 1.0))
    d = _degree(out)
    return out[:d + 1]


def _cluster_points(points: list[tuple[complex, complex]], tol: float):
    clusters: list[list[tuple[complex, complex]]] = []
    for p in points:
        for c in clusters:
            q = c[0]
            if max(abs(p[0] - q[0]), abs(p[1] - q[1])) <= tol * max(1.0, abs(q[0]), abs(q[1])):
                c.append(p)
                break
        else:
            clusters.append([p])
    return [(c[0], len(c)) for c in clusters]


# --- Monte Carlo root counting --------------------------------------------------

def random_polynomial(A: LatticeConfiguration, rng: random.Random,
                      bound: int = COEFF_RANGE) -> LaurentPolynomial:
    """Polynomial with support ``A`` and uniform nonzero integer coefficients in ``[-bound, bound]``."""
    terms = {}
    for u in A:
        c = 0
        while c == 0:
            c = rng.randint(-bound, bound)
        terms[tuple(u)] = Fraction(c)
    return LaurentPolynomial(terms, A.dim_ambient)


def random_system(structure, rng: random.Random, bound: int = COEFF_RANGE) -> list[LaurentPolynomial]:
    polys = []
    for A, k in zip(structure.configurations, structure.partition):
        polys.extend(random_polynomial(A, rng, bound) for _ in range(k))
    return polys


@dataclass
class TrialStatistics:
    seed: int
    trials: int
    expected: int
    counts: Counter
    flagged: list[tuple[int, str]]
    mismatches: list[tuple[int, int]]

    @property
    def flagged_rate(self) -> float:
        return len(self.flagged) / self.trials if self.trials else 0.0

    @property
    def consistent(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {"seed": self.seed, "trials": self.trials, "expected": self.expected,
                "counts": {str(k): v for k, v in sorted(self.counts.items())},
                "flagged": [{"trial": t, "reason": r} for t, r in self.flagged],
                "mismatches": [{"trial": t, "count": c} for t, c in self.mismatches]}


def count_torus_roots(structure, trials: int = 50, seed: int = 0, tol: float = DEFAULT_TOL,
                      cluster_tol: float = DEFAULT_CLUSTER_TOL) -> TrialStatistics:
    """Solve random systems on the structure's supports and tally root counts.

    A trial is flagged (and excluded from the comparison) when the solver
    raises or when clustering merges roots, which signals a near-degenerate
    draw.  Every other trial whose count differs from the mixed volume is a
    mismatch.
    """
    from .chasles_core import _as_structure

    structure = _as_structure(structure)
    if structure.d != 2:
        raise DimensionMismatch("root counting is implemented for d = 2")
    expected = structure.mixed_volume()
    rng = random.Random(seed)
    counts: Counter = Counter()
    flagged: list[tuple[int, str]] = []
    mismatches: list[tuple[int, int]] = []
    for t in range(trials):
        F, G = random_system(structure, rng)
        try:
            sol = solve_2d(F, G, tol, cluster_tol)
        except ChaslesError as exc:
            flagged.append((t, f"{type(exc).__name__}: {exc}"))
            continue
        if any(r.multiplicity > 1 for r in sol):
            flagged.append((t, "clustered roots"))
            continue
        counts[sol.total_multiplicity] += 1
        if sol.total_multiplicity != expected:
            mismatches.append((t, sol.total_multiplicity))
    return TrialStatistics(seed, trials, expected, counts, flagged, mismatches)
