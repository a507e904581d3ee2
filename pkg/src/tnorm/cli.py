"""Command line front end.

Exit codes: 0 success, 2 input or precondition error, 3 IO error, 4 check failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .errors import TnormError
from .families import GN, HN, FamilySpec, bs_diagnostic, check_family, family_relator, fib_shape_check
from .polytope import CohomClass, FIBERED_RULES, MARKING_RULES, dual_ball, marked_polytope
from .report import build_report, dual_block, dumps, norm_query, run_pipeline
from .svg import PANELS, render_svg

EXIT_OK, EXIT_INPUT, EXIT_IO, EXIT_CHECK = 0, 2, 3, 4


def _add_input(p: argparse.ArgumentParser):
    g = p.add_argument_group("input (exactly one of --relator, --twists, --family)")
    g.add_argument("--relator", help="relator in x, y; capitals are inverses, e.g. xyXY or 'x y^4 X y^-4'")
    g.add_argument("--twists", help="twist word, e.g. 'B (D c)^2'")
    g.add_argument("--family", choices=["gn", "hn", "fm"])
    g.add_argument("--param", type=int, help="family parameter n (or m)")
    p.add_argument("--marking", choices=MARKING_RULES, default="existential",
                   help="rule for squares whose incident hull vertices disagree")


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tnorm", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"tnorm {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("polytope", help="walk, hull and marked polytope as JSON")
    _add_input(p)
    p.add_argument("--dual", action="store_true", help="include the norm unit ball")
    p.add_argument("--out", help="write the report here instead of stdout")

    p = sub.add_parser("norm", help="Thurston norm of a class")
    _add_input(p)
    p.add_argument("--phi", required=True, help="class values on x and y, e.g. '1,0' or '1/2,-3/4'")
    p.add_argument("--fibered", action="store_true", help="also decide whether the class is fibered")
    p.add_argument("--rule", choices=FIBERED_RULES, default="strict")
    p.add_argument("--dual", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("svg", help="draw the walk, hull and polytope")
    _add_input(p)
    p.add_argument("--out", required=True)
    p.add_argument("--panels", default=",".join(PANELS), help="comma separated subset of walk,hull,polytope")

    p = sub.add_parser("sweep", help="run g_n or h_n for n = 1..N")
    p.add_argument("--family", choices=[GN, HN], required=True)
    p.add_argument("--max", type=_positive, required=True)
    p.add_argument("--check", action="store_true", help="check vertex counts, marks and symmetry")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--out")

    p = sub.add_parser("fm-report", help="f_m relator under all composition conventions")
    p.add_argument("--max", type=_positive, default=4)
    p.add_argument("--out")
    return parser


def _pipeline(args):
    chosen = [k for k in ("relator", "twists", "family") if getattr(args, k) is not None]
    if len(chosen) != 1:
        raise _Usage("give exactly one of --relator, --twists, --family")
    if args.family is not None and args.param is None:
        raise _Usage("--family needs --param")
    return run_pipeline(args.relator, args.twists, args.family, args.param, args.marking)


class _Usage(Exception):
    pass


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_polytope(args) -> int:
    p = _pipeline(args)
    queries = {"dual_ball": dual_block(dual_ball(p.polytope))} if args.dual else {}
    _emit(dumps(build_report(p, queries)), args.out)
    return EXIT_OK


def cmd_norm(args) -> int:
    p = _pipeline(args)
    phi = CohomClass.parse(args.phi)
    queries = norm_query(p.polytope, phi, args.fibered, args.rule)
    if args.dual:
        queries["dual_ball"] = dual_block(dual_ball(p.polytope))
    _emit(dumps(build_report(p, queries)), args.out)
    return EXIT_OK


def cmd_svg(args) -> int:
    p = _pipeline(args)
    panels = [s.strip() for s in args.panels.split(",") if s.strip()]
    bad = [s for s in panels if s not in PANELS]
    if bad or not panels:
        raise _Usage(f"unknown panels {bad}; choose from {','.join(PANELS)}")
    text = render_svg(p.walk, p.hull, p.polytope, panels, title=str(p.relator)[:200])
    Path(args.out).write_text(text)
    return EXIT_OK


def _sweep_one(job):
    family, n, check = job
    spec = FamilySpec(family, n)
    r = family_relator(spec)
    mp = marked_polytope(r)
    row = {
        "family": family,
        "n": n,
        "relator_length": len(r),
        "vertex_count": len(mp),
        "all_marked": mp.all_marked(),
        "distinct_edge_lengths": len(set(mp.squared_edge_lengths())),
    }
    if check:
        row["failures"] = check_family(spec)
        if family == GN:
            row["fibonacci_shape"] = fib_shape_check(n)
    return row


def _paint(text: str, ok: bool) -> str:
    if os.environ.get("NO_COLOR") is not None or not sys.stderr.isatty():
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


def cmd_sweep(args) -> int:
    jobs = [(args.family, n, args.check) for n in range(1, args.max + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_one, jobs))
    else:
        rows = [_sweep_one(j) for j in jobs]
    passed = all(not row.get("failures") for row in rows)
    doc = {"family": args.family, "max": args.max, "checked": args.check, "results": rows}
    if args.check:
        doc["passed"] = passed
        for row in rows:
            ok = not row["failures"]
            line = f"{row['family']}({row['n']}): {row['vertex_count']} vertices "
            sys.stderr.write(line + _paint("PASS" if ok else "FAIL", ok) + "\n")
    doc["version"] = __version__
    _emit(dumps(doc), args.out)
    return EXIT_OK if passed else EXIT_CHECK


def cmd_fm_report(args) -> int:
    rows = [r.as_dict() for r in bs_diagnostic(range(1, args.max + 1))]
    matches = sorted({(r["order"], r["mirror"]) for r in rows if r["status"] == "MATCH"})
    doc = {
        "target": "x y^m X Y^m",
        "kill": ["w", "z"],
        "matching_conventions": [{"order": o, "mirror": m} for o, m in matches],
        "results": rows,
        "version": __version__,
    }
    _emit(dumps(doc), args.out)
    return EXIT_OK


COMMANDS = {
    "polytope": cmd_polytope,
    "norm": cmd_norm,
    "svg": cmd_svg,
    "sweep": cmd_sweep,
    "fm-report": cmd_fm_report,
}


def _fail(code: int, error: dict) -> int:
    sys.stdout.write(json.dumps({"error": error}, indent=2) + "\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        return _fail(EXIT_INPUT, {"type": "UsageError", "message": str(exc)})
    except TnormError as exc:
        return _fail(EXIT_INPUT, exc.as_dict())
    except OSError as exc:
        return _fail(EXIT_IO, {"type": type(exc).__name__, "message": str(exc)})


if __name__ == "__main__":
    sys.exit(main())
