"""``bnkit`` command line.

Exit status: 0 success, 1 verification failure (or invalid / non-rational
input structure), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import ParseError
from .cube import ScaleError, cube_homology, torus_diagram
from .exact import HomologySummary, field as get_field
from .figures import curve_lift_json, curve_lift_svg, emit_grid
from .pairing import reduced_bn_of_closure, torus_link_bn
from .typed import build_qn, match_rational, parse_typed, serialize_typed, validate
from .verify import SUITES, ScaleGuardError, run_suite

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _char(text: str) -> int:
    try:
        return get_field(int(text)).c
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _char_list(text: str) -> list[int]:
    return [_char(t) for t in text.split(",") if t.strip()]


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _emit_summary(summary: HomologySummary, as_json: bool, meta: dict) -> None:
    if as_json:
        sys.stdout.write(json.dumps({**meta, **summary.to_dict()}, indent=2) + "\n")
    else:
        sys.stdout.write(summary.to_text())


def cmd_validate(args) -> int:
    t = parse_typed(_read(args.file))
    report = validate(t)
    if report:
        for line in report:
            print(line)
        return FAILED
    print(f"valid: {len(t.generators)} generators, {len(t.arrows)} arrows over {t.field.name}")
    return OK


def cmd_qtangle(args) -> int:
    _write(args.output, serialize_typed(build_qn(args.n, args.c)))
    return OK


def cmd_closure(args) -> int:
    if (args.file is None) == (args.n is None):
        raise UsageError("give exactly one of a .typed file or -n")
    if args.file is not None:
        t = parse_typed(_read(args.file))
        if args.c is not None and args.c != t.field.c:
            raise UsageError(f"-c {args.c} conflicts with 'char {t.field.c}' in {args.file}")
    else:
        t = build_qn(args.n, 2 if args.c is None else args.c)
    report = validate(t)
    if report:
        for line in report:
            print(line, file=sys.stderr)
        return FAILED
    _emit_summary(reduced_bn_of_closure(t), args.json, {"c": t.field.c})
    return OK


def cmd_torus(args) -> int:
    if args.oracle:
        summary = cube_homology(torus_diagram(args.n), args.c, reduced=True)
    else:
        summary = torus_link_bn(args.n, args.c)
    meta = {"n": args.n, "c": args.c, "method": "oracle" if args.oracle else "pairing"}
    _emit_summary(summary, args.json, meta)
    return OK


def cmd_theta(args) -> int:
    t = parse_typed(_read(args.file))
    m, why = match_rational(t)
    if m is None:
        print(f"not rational: {why}", file=sys.stderr)
        return FAILED
    print(m.n)
    return OK


def cmd_verify(args) -> int:
    chars = args.c if args.c else [0, 2, 3]
    report = run_suite(args.suite, args.range, chars)
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    return OK if report.passed else FAILED


def cmd_grid(args) -> int:
    fmt, out = ("svg", args.svg) if args.svg else ("tsv", args.tsv)
    _write(out, emit_grid(args.n, args.c, fmt))
    return OK


def cmd_lift(args) -> int:
    if args.svg:
        _write(args.svg, curve_lift_svg(args.n))
    else:
        sys.stdout.write(curve_lift_json(args.n))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bnkit", description="Exact reduced Bar-Natan homology of 2-strand tangle closures."
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a typed v1 file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("qtangle", help="write the type D structure of Q_n")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-c", type=_char, default=2)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_qtangle)

    s = sub.add_parser("closure", help="reduced homology of the closure of a tangle")
    s.add_argument("file", nargs="?")
    s.add_argument("-n", type=int)
    s.add_argument("-c", type=_char)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_closure)

    s = sub.add_parser("torus", help="reduced homology of T(2, n)")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-c", type=_char, default=2)
    s.add_argument("--oracle", action="store_true", help="use the cube of resolutions")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_torus)

    s = sub.add_parser("theta", help="theta of a rational type D structure")
    s.add_argument("file")
    s.set_defaults(func=cmd_theta)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("suite", choices=sorted(SUITES))
    s.add_argument("--range", type=int, required=True)
    s.add_argument("-c", type=_char_list, help="comma-separated characteristics (default 0,2,3)")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("grid", help="Mor complex of the T(2, n) closure on the (h, q) grid")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-c", type=_char, default=2)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--svg", metavar="OUT")
    g.add_argument("--tsv", metavar="OUT")
    s.set_defaults(func=cmd_grid)

    s = sub.add_parser("lift", help="lift of the Q_n curve to the plane (JSON, or SVG)")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("--svg", metavar="OUT")
    s.set_defaults(func=cmd_lift)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else OK
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return USAGE
    except (UsageError, ScaleError, ScaleGuardError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
