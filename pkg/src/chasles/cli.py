"""Command-line interface.

Exit codes: 0 success, 2 input error, 3 mathematical degeneracy,
4 verification failure.
"""

from __future__ import annotations

import argparse
import sys

from .chasles_core import (
    extra_point,
    extra_point_via_eliminant,
    family_pq,
    is_chasles_configuration,
    is_chasles_structure,
)
from .classifier import classify_planar_saturated_chasles
from .errors import DegeneracyError, InputError, ParseError
from .lattice_geometry import (
    convex_hull,
    dimension,
    is_saturated,
    mixed_volume,
    normalized_volume,
    pick_counts,
)
from .polynomials import polynomial_from_json
from .serialization import (
    config_from_json,
    config_to_json,
    dumps,
    load_json,
    points_from_json,
    polytope_to_json,
    structure_from_json,
)
from .solver_numeric import DEFAULT_CLUSTER_TOL, DEFAULT_TOL, count_torus_roots, solve_2d
from .verification import run_checks

EXIT_OK, EXIT_INPUT, EXIT_DEGENERATE, EXIT_VERIFY = 0, 2, 3, 4


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    A = config_from_json(load_json(args.config))
    d = A.dim_ambient
    dim = dimension(A)
    rep = is_chasles_configuration(A)
    data = {"d": d, "dimension": dim, "points": len(A), "volume": normalized_volume(A),
            "saturated": is_saturated(A), "chasles": rep.is_chasles, "N": rep.N if rep.is_chasles else None}
    if d == 2:
        interior, boundary = pick_counts(A)
        data["interior"], data["boundary"] = interior, boundary
    if args.json:
        data["hull"] = polytope_to_json(convex_hull(A))
        _emit(dumps(data), args.out)
        return EXIT_OK
    lines = [f"dimension: {dim} (ambient {d})", f"points: {len(A)}", f"volume: {data['volume']}",
             f"saturated: {'yes' if data['saturated'] else 'no'}"]
    if d == 2:
        lines.append(f"interior points: {data['interior']}, boundary points: {data['boundary']}")
    lines.append(f"Chasles: yes, N={rep.N}" if rep.is_chasles else f"Chasles: no ({rep.reason})")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _load_request(args):
    data = load_json(args.structure)
    if args.points is None:
        if not isinstance(data, dict) or "structure" not in data or "points" not in data:
            raise ParseError("expected a request object with 'structure' and 'points', or a points file")
        return structure_from_json(data["structure"]), points_from_json(data["points"])
    points = load_json(args.points)
    if isinstance(points, dict):
        points = points.get("points")
    return structure_from_json(data), points_from_json(points)


def cmd_extra_point(args) -> int:
    structure, points = _load_request(args)
    solver = extra_point if args.command == "extra-point" else extra_point_via_eliminant
    result = solver(structure, points)
    _emit(dumps(result.to_json()), args.out)
    return EXIT_OK


def cmd_mixed_volume(args) -> int:
    if len(args.files) == 1:
        data = load_json(args.files[0])
        if isinstance(data, dict) and "configurations" in data:
            S = structure_from_json(data)
            entries = list(zip(S.configurations, S.partition))
        else:
            entries = [(config_from_json(data), config_from_json(data).dim_ambient)]
    else:
        entries = [(config_from_json(load_json(f)), 1) for f in args.files]
    d = entries[0][0].dim_ambient
    if sum(k for _, k in entries) != d:
        raise InputError(f"multiplicities sum to {sum(k for _, k in entries)}, need {d}")
    value = mixed_volume(entries)
    _emit(dumps({"mixed_volume": value}) if args.json else f"{value}\n", args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    classes = classify_planar_saturated_chasles(args.box, args.max_vertices)
    if args.json or args.out:
        _emit(dumps({"box": args.box, "max_vertices": args.max_vertices, "count": len(classes),
                     "classes": [c.to_json() for c in classes]}), args.out)
    else:
        lines = [f"{len(classes)} classes"]
        for c in classes:
            vol, interior, boundary, nverts, edges = c.invariant_key
            verts = " ".join(f"({x},{y})" for x, y in c.to_json()["vertices"])
            lines.append(f"vol {vol:2d}  boundary {boundary}  vertices {nverts}  {verts}")
        _emit("\n".join(lines) + "\n", None)
    return EXIT_OK


def cmd_solve2d(args) -> int:
    data = [load_json(f) for f in args.files]
    if len(data) == 1 and isinstance(data[0], dict) and "polynomials" in data[0]:
        data = data[0]["polynomials"]
    if len(data) != 2:
        raise InputError("solve2d needs exactly two polynomials")
    F, G = (polynomial_from_json(p) for p in data)
    roots = solve_2d(F, G, args.tol, args.cluster_tol)
    _emit(dumps(roots.to_json()), args.out)
    return EXIT_OK


def cmd_family(args) -> int:
    S = family_pq(args.n)
    rep = is_chasles_structure(S)
    data = {"n": args.n, "P": config_to_json(S.configurations[0]), "Q": config_to_json(S.configurations[1]),
            "N": rep.N, "mixed_volume": rep.mixed_volume, "chasles": rep.is_chasles}
    if args.trials:
        data["root_counts"] = count_torus_roots(S, args.trials, args.seed, args.tol,
                                                args.cluster_tol).to_json()
    if args.json:
        _emit(dumps(data), args.out)
    else:
        lines = [f"P_{args.n}: {len(S.configurations[0])} points, Q_{args.n}: {len(S.configurations[1])} points",
                 f"mixed volume: {rep.mixed_volume}",
                 f"Chasles structure: {'yes' if rep.is_chasles else 'no'}, N={rep.N}"]
        if args.trials:
            rc = data["root_counts"]
            lines.append(f"root counts over {args.trials} trials (seed {args.seed}): {rc['counts']}, "
                         f"flagged {len(rc['flagged'])}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    only = [name for item in (args.only or []) for name in item.split(",") if name]
    report = run_checks(only or None, args.seed)
    _emit(dumps(report.to_json()) if args.json else report.to_text() + "\n", args.out)
    return EXIT_OK if report.passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chasles", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--out", help="write output to this file instead of stdout")
        return p

    p = common(sub.add_parser("analyze", help="dimension, volume, saturation and Chasles verdict"))
    p.add_argument("config", help="configuration JSON file ('-' for stdin)")
    p.set_defaults(func=cmd_analyze)

    for name, text in [("extra-point", "extra common zero via directional resultants (d = 2)"),
                       ("eliminant-point", "extra common zero via elimination (d = 2, 3)")]:
        p = common(sub.add_parser(name, help=text))
        p.add_argument("structure", help="request JSON, or structure/configuration JSON")
        p.add_argument("points", nargs="?", help="points JSON when not part of the request")
        p.set_defaults(func=cmd_extra_point)

    p = common(sub.add_parser("mixed-volume", help="mixed volume of configurations"))
    p.add_argument("files", nargs="+", help="one structure JSON, or d configuration JSON files")
    p.set_defaults(func=cmd_mixed_volume)

    p = common(sub.add_parser("classify", help="saturated planar Chasles configurations"))
    p.add_argument("--box", type=int, default=4)
    p.add_argument("--max-vertices", type=int, default=6)
    p.set_defaults(func=cmd_classify)

    p = common(sub.add_parser("solve2d", help="numeric torus roots of two bivariate polynomials"))
    p.add_argument("files", nargs="+", help="two polynomial JSON files or one {'polynomials': [...]} file")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--cluster-tol", type=float, default=DEFAULT_CLUSTER_TOL)
    p.set_defaults(func=cmd_solve2d)

    p = common(sub.add_parser("family", help="the quadrangle pair (P_n, Q_n)"))
    p.add_argument("n", type=int)
    p.add_argument("--trials", type=int, default=0, help="count roots of this many random systems")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--cluster-tol", type=float, default=DEFAULT_CLUSTER_TOL)
    p.set_defaults(func=cmd_family)

    p = common(sub.add_parser("verify-paper", help="reproduce every worked example"))
    p.add_argument("--only", action="append", help="run only these checks (comma separated)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DegeneracyError as exc:
        print(f"degenerate: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
