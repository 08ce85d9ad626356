"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line with its runtime.  The lines
are also gathered into an "acceptance criteria" section of the pytest summary.
"""
import sys
import time

import pytest

from chasles import verification as v
from chasles.chasles_core import family_pq, is_chasles_configuration, is_chasles_structure
from chasles.classifier import classify_planar_saturated_chasles
from chasles.lattice_geometry import (
    convex_hull,
    is_saturated,
    lattice_points,
    minkowski_sum,
    normalized_volume,
)

SEED = 0


def record(log, number, title, limit, run):
    """Time ``run() -> (ok, detail)``, print one status line and assert."""
    start = time.perf_counter()
    ok, detail = run()
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        ok, detail = False, f"{detail}; over the {limit}s budget"
    budget = f" < {limit}s" if limit is not None else ""
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({elapsed:.2f}s{budget}) {detail}"
    log.append(line)
    print("\n" + line)
    assert ok, detail


def test_criterion_01_closed_form(criteria_log):
    def run():
        matches, _, degenerate, failures = v.closed_form_trials(SEED, 200)
        return (not failures and matches == 200 - degenerate,
                f"{matches} exact matches, {degenerate} degenerate skipped, {len(failures)} failures")
    record(criteria_log, 1, "triangle closed form for the third zero", 2.0, run)


def test_criterion_02_collinearity(criteria_log):
    def run():
        matches, collinear, degenerate, failures = v.closed_form_trials(SEED, 200)
        return (not failures and collinear == 200 - degenerate,
                f"{collinear}/{200 - degenerate} collinear triples")
    record(criteria_log, 2, "three zeros exactly collinear", 2.0, run)


def test_criterion_03_resultant_identities(criteria_log):
    def run():
        _, rx, ok_x = v.check_rx(SEED)
        _, ry, ok_y = v.check_ry(SEED)
        return ok_x and ok_y, f"R_x {rx}, R_y {ry}"
    record(criteria_log, 3, "13-term R_x and R_y identities", 1.0, run)


def test_criterion_04_classical_ninth_point(criteria_log):
    def run():
        _, computed, ok = v.check_classical_ninth_point(SEED, draws=25, tol=1e-8)
        return ok, str(computed)
    record(criteria_log, 4, "ninth point of two cubics, exact and numeric", 10.0, run)


def test_criterion_05_quadrangle_family(criteria_log):
    def run():
        bad = []
        for n in range(1, 21):
            S = family_pq(n)
            rep = is_chasles_structure(S)
            P, Q = S.configurations
            area = normalized_volume(lattice_points(minkowski_sum(convex_hull(P), convex_hull(Q))))
            if not (rep and rep.mixed_volume == 2 * n + 2 and len(P) == 2 * n + 2
                    and area == 4 * (2 * n + 1)):
                bad.append(n)
        return not bad, f"failing n: {bad}" if bad else "n = 1..20 all exact"
    record(criteria_log, 5, "quadrangle family P_n, Q_n", 2.0, run)


def test_criterion_06_classification(criteria_log):
    def run():
        counts = {
            "defaults": {c.canonical for c in classify_planar_saturated_chasles()},
            "box 3": {c.canonical for c in classify_planar_saturated_chasles(search_box=3)},
            "max_vertices 8": {c.canonical for c in classify_planar_saturated_chasles(max_vertices=8)},
        }
        base = counts["defaults"]
        ok = len(base) == 16 and all(s == base for s in counts.values())
        return ok, ", ".join(f"{k}: {len(s)}" for k, s in counts.items())
    record(criteria_log, 6, "sixteen saturated planar classes, stable under reruns", 60.0, run)


def test_criterion_07_predicates(criteria_log):
    def run():
        octad = is_chasles_configuration(v.OCTAD)
        ok = bool(octad) and octad.N == 7
        for d in range(3, 7):
            A = v.a_d(d)
            rep = is_chasles_configuration(A)
            ok &= bool(rep) and is_saturated(A) and rep.volume == 4 and len(A) == d + 3
        return ok, f"octad N = {octad.N}; A_3..A_6 checked"
    record(criteria_log, 7, "octad and A_d predicates", 1.0, run)


def test_criterion_08_counterexample(criteria_log):
    def run():
        _, computed, ok = v.check_non_chasles(SEED)
        return ok, f"discriminant {computed['discriminant'].replace('z', 't')}"
    record(criteria_log, 8, "five-point triangle is not Chasles", 2.0, run)


def test_criterion_09_root_counts(criteria_log):
    def run():
        _, computed, ok = v.check_bkk(SEED, trials=50)
        detail = "; ".join(f"{k}: mvol {c['expected']}, {c['mismatches']} mismatches, "
                           f"flagged {c['flagged_rate']:.0%}" for k, c in computed.items())
        return ok, detail
    record(criteria_log, 9, "numeric root counts equal mixed volumes", 60.0, run)


def test_criterion_10_product_of_roots(criteria_log):
    def run():
        errs = v.product_oracle_errors(SEED, 50)
        return max(errs) <= 1e-6, f"max relative error {max(errs):.2e} over {len(errs)} systems"
    record(criteria_log, 10, "coordinate products from directional resultants", 60.0, run)


def test_criterion_11_unimodular_invariance(criteria_log):
    def run():
        fails = v.invariance_failures(SEED, 500)
        return not fails, f"{len(fails)} of 500 pairs disagree"
    record(criteria_log, 11, "unimodular invariance", None, run)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
