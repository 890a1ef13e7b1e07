"""Command-line interface.

Exit codes: 0 success, 1 validation failure, 2 parse or usage error.
Payload goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys

from . import oracle, textio
from .diagram import le_validate
from .errors import InconsistentNecklaceError, OutOfShapeError, ParseError, ScaleGuardError
from .forward import necklace_from_le
from .necklace import GrassmannNecklace, necklace_validate
from .reverse import le_from_necklace, positroid_dimension

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class _Fail(Exception):
    def __init__(self, code, message=None, payload=None):
        self.code = code
        self.message = message
        self.payload = payload


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Fail(EXIT_USAGE, f"cannot read {source}: {exc.strerror}") from None


def _as_json(text: str):
    stripped = text.lstrip()
    if not stripped.startswith("{"):
        return None
    try:
        obj = textio.loads(text)
    except ParseError:
        return None
    return obj if isinstance(obj, dict) else None


def load_object(text: str):
    """Parse a diagram or necklace from text or JSON, whichever it is."""
    obj = _as_json(text)
    if obj is not None:
        if "terms" in obj:
            return textio.necklace_from_json(obj)
        return textio.diagram_from_json(obj)
    first = text.strip().splitlines()[0] if text.strip() else ""
    if "rows=" in first:
        return textio.parse_diagram(text)
    return textio.parse_necklace(text)


def load_diagram(text: str):
    obj = load_object(text)
    if isinstance(obj, GrassmannNecklace):
        raise _Fail(EXIT_USAGE, "expected a Le diagram, got a necklace")
    return obj


def load_necklace(text: str) -> GrassmannNecklace:
    obj = load_object(text)
    if not isinstance(obj, GrassmannNecklace):
        raise _Fail(EXIT_USAGE, "expected a Grassmann necklace, got a diagram")
    return obj


def _require_le(d):
    try:
        report = le_validate(d)
    except OutOfShapeError as exc:
        raise _Fail(EXIT_INVALID, str(exc)) from None
    if not report.ok:
        raise _Fail(EXIT_INVALID, _le_report_text(report))
    return d


def _le_report_text(report) -> str:
    if report.ok:
        return "ok"
    lines = ["Le condition violated:"]
    for a, b, c in report.violations:
        lines.append(f"  + at {tuple(a)} and {tuple(b)} but not at {tuple(c)}")
    return "\n".join(lines)


def _gn_report_text(report) -> str:
    if report.ok:
        return "ok"
    mode = "strict" if report.strict else "lenient"
    lines = [f"necklace axioms violated ({mode}):"]
    for i, a, b in report.failures:
        lines.append(f"  i={i}: I_i={{{','.join(map(str, a))}}} -> I_(i+1)={{{','.join(map(str, b))}}}")
    return "\n".join(lines)


def _emit_diagram(d, fmt, ascii_art=False) -> str:
    if fmt == "json":
        return textio.dumps(textio.diagram_to_json(d))
    return textio.render_diagram(d, ascii_art=ascii_art)


def _emit_necklace(N, fmt) -> str:
    if fmt == "json":
        return textio.dumps(textio.necklace_to_json(N))
    return textio.render_necklace(N) + "\n"


def cmd_le2gn(args) -> str:
    d = _require_le(load_diagram(_read(args.input)))
    return _emit_necklace(necklace_from_le(d), args.format)


def cmd_gn2le(args) -> str:
    N = load_necklace(_read(args.input))
    try:
        d = le_from_necklace(N, check=not args.unchecked)
    except InconsistentNecklaceError as exc:
        raise _Fail(EXIT_INVALID, str(exc)) from None
    return _emit_diagram(d, args.format)


def cmd_validate_le(args) -> str:
    d = load_diagram(_read(args.input))
    try:
        report = le_validate(d)
    except OutOfShapeError as exc:
        raise _Fail(EXIT_INVALID, str(exc)) from None
    out = textio.dumps(report.to_dict()) if args.format == "json" else _le_report_text(report) + "\n"
    if not report.ok:
        raise _Fail(EXIT_INVALID, payload=out)
    return out


def cmd_validate_gn(args) -> str:
    report = necklace_validate(load_necklace(_read(args.input)), strict=args.strict)
    out = textio.dumps(report.to_dict()) if args.format == "json" else _gn_report_text(report) + "\n"
    if not report.ok:
        raise _Fail(EXIT_INVALID, payload=out)
    return out


def _diagram_from_any(text: str):
    obj = load_object(text)
    if isinstance(obj, GrassmannNecklace):
        try:
            return le_from_necklace(obj)
        except InconsistentNecklaceError as exc:
            raise _Fail(EXIT_INVALID, str(exc)) from None
    return _require_le(obj)


def cmd_dim(args) -> str:
    dim = positroid_dimension(_diagram_from_any(_read(args.input)))
    if args.format == "json":
        return textio.dumps({"dimension": dim})
    return f"{dim}\n"


def cmd_render(args) -> str:
    obj = load_object(_read(args.input))
    if isinstance(obj, GrassmannNecklace):
        return _emit_necklace(obj, args.format)
    return _emit_diagram(obj, args.format, ascii_art=args.ascii_art)


def cmd_enumerate(args) -> str:
    k, n = args.k, args.n
    if args.what == "shapes":
        items = list(oracle.enumerate_shapes(k, n))
    elif args.what == "le":
        items = list(oracle.enumerate_le(k, n, args.max_n))
    else:
        items = list(oracle.enumerate_necklaces(k, n, args.max_n))
    if args.count_only:
        if args.format == "json":
            return textio.dumps({"k": k, "n": n, "what": args.what, "count": len(items)})
        return f"{len(items)}\n"
    if args.what == "shapes":
        if args.format == "json":
            return textio.dumps([{"k": s.k, "n": s.n, "rows": list(s.rows)} for s in items])
        return "".join(f"{s.k} {s.n} rows={','.join(map(str, s.rows))}\n" for s in items)
    if args.what == "le":
        if args.format == "json":
            return textio.dumps([textio.diagram_to_json(d) for d in items])
        return "\n".join(textio.render_diagram(d) for d in items)
    if args.format == "json":
        return textio.dumps([textio.necklace_to_json(N) for N in items])
    return "".join(textio.render_necklace(N) + "\n" for N in items)


def cmd_roundtrip(args) -> str:
    report = oracle.roundtrip_report(args.k, args.n, args.max_n)
    if args.json or args.format == "json":
        out = textio.dumps(report.to_dict())
    else:
        out = (
            f"type ({report.k},{report.n}): shapes={report.shapes} "
            f"le_diagrams={report.le_diagrams} necklaces={report.necklaces} "
            f"roundtrip_failures={len(report.roundtrip_failures)} "
            f"invariant_failures={len(report.invariant_failures)} "
            f"{'PASS' if report.ok else 'FAIL'}\n"
        )
    if not report.ok:
        raise _Fail(EXIT_INVALID, payload=out)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lenecklace",
        description="Convert between Le diagrams and Grassmann necklaces.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("input", help="input file, or - for standard input")
        p.set_defaults(func=func)
        return p

    with_input("le2gn", cmd_le2gn, "Le diagram -> Grassmann necklace")
    p = with_input("gn2le", cmd_gn2le, "Grassmann necklace -> Le diagram")
    p.add_argument("--unchecked", action="store_true", help="skip necklace axiom check on input")
    with_input("validate-le", cmd_validate_le, "check the Le condition")
    p = with_input("validate-gn", cmd_validate_gn, "check the necklace axioms")
    p.add_argument("--strict", action="store_true", help="forbid I_(i+1) = I_i when i is in I_i")
    with_input("dim", cmd_dim, "number of + squares (positroid dimension)")
    p = with_input("render", cmd_render, "re-render an object")
    p.add_argument("--ascii-art", action="store_true", help="draw grid with border and boundary labels")

    for name, func, help_text in (
        ("enumerate", cmd_enumerate, "list all objects of a type"),
        ("roundtrip", cmd_roundtrip, "exhaustive round-trip certification"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--max-n", type=int, default=None, help="raise the enumeration size limit")
        p.set_defaults(func=func)
        if name == "enumerate":
            p.add_argument("--what", choices=("le", "gn", "shapes"), default="le")
            p.add_argument("--count-only", action="store_true")
        else:
            p.add_argument("--json", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        out = args.func(args)
    except _Fail as fail:
        if fail.payload:
            sys.stdout.write(fail.payload)
        if fail.message:
            print(f"error: {fail.message}", file=sys.stderr)
        return fail.code
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ScaleGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
