"""``lgmorita`` command line.

Exit status: 0 when every check passes, 1 on a mathematical failure
(a matrix pair that does not factor, a failed morphism equation, no
homotopy up to the degree bound, ...), 2 on usage or parse errors.
Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import difflib
import io
import json
import sys
from importlib import resources
from pathlib import Path
from typing import List, Optional, Sequence, TextIO

from . import serialize
from .errors import DocumentError, LGError, ParseError, ShapeMismatch
from .homotopy import DEFAULT_DEGREE_BOUND, GradedMorphism, NotFoundUpToD, search_homotopy
from .koszul import build_delta
from .matrix import PolyMatrix, det, transpose
from .mf import MatrixFactorization, PadVariant, det_divides_power, pad, yoshino_tensor
from .morita import (
    MoritaContext,
    Report,
    corollary_check,
    necessary_condition,
    non_sufficiency_witness,
    verify_triangles,
    zero_determinant_check,
)
from .text import parse_polynomial, print_polynomial

__all__ = ["main", "run", "parse_polynomial", "print_polynomial"]


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


# ---------------------------------------------------------------- inputs


def parse_matrix(text: str) -> PolyMatrix:
    """``"x,-y;y,x"`` (rows split on ``;``) or a JSON list of rows."""
    text = text.strip()
    try:
        if text.startswith("["):
            rows = json.loads(text)
        else:
            rows = [[c for c in r.split(",")] for r in text.split(";")]
        return PolyMatrix.from_rows([[parse_polynomial(str(c)) for c in r] for r in rows])
    except json.JSONDecodeError as exc:
        raise DocumentError(f"bad matrix {text!r}: {exc}") from None
    except ShapeMismatch as exc:
        raise DocumentError(f"bad matrix {text!r}: {exc}") from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str, *types):
    obj = serialize.loads(_read(path))
    if types and not isinstance(obj, types):
        names = " or ".join(t.__name__ for t in types)
        raise DocumentError(f"{path}: expected a {names} document")
    return obj


def _factorization(args) -> MatrixFactorization:
    if args.input:
        if any(v is not None for v in (args.f, args.p, args.q)):
            raise _Usage("give either --input or --f/--p/--q, not both")
        return _load(args.input, MatrixFactorization)
    if None in (args.f, args.p, args.q):
        raise _Usage("--f, --p and --q are required without --input")
    return MatrixFactorization(parse_polynomial(args.f), parse_matrix(args.p), parse_matrix(args.q))


# ---------------------------------------------------------------- commands


def factorization_report(m: MatrixFactorization) -> Report:
    r = Report("factorization")
    r.details["f"] = print_polynomial(m.f)
    r.details["size"] = str(m.n)
    fi = PolyMatrix.scalar(m.n, m.f)
    r.add("P Q = f I", m.p @ m.q == fi)
    r.add("Q P = f I", m.q @ m.p == fi)
    r.add("(Q^t, P^t) is a factorization", transpose(m.p) @ transpose(m.q) == fi)
    if not m.f.is_zero():
        dp, dq = det(m.p), det(m.q)
        r.add("det(P) det(Q) = f^n", dp * dq == m.f ** m.n)
        r.add("det(P) divides f^n", det_divides_power(m))
    return r


def cmd_verify(args):
    return factorization_report(_factorization(args))


def cmd_pad(args):
    return pad(_factorization(args), args.size, PadVariant(args.variant))


def cmd_tensor(args):
    return yoshino_tensor(_load(args.left, MatrixFactorization), _load(args.right, MatrixFactorization))


def cmd_det(args):
    if (args.matrix is None) == (args.input is None):
        raise _Usage("give exactly one of --matrix or --input")
    m = parse_matrix(args.matrix) if args.matrix is not None else _load(args.input, PolyMatrix)
    return det(m)


def cmd_delta(args):
    f = parse_polynomial(args.f)
    variables = args.vars.split(",") if args.vars else None
    try:
        return build_delta(f, variables).as_factorization()
    except ValueError as exc:
        raise _Usage(str(exc)) from None


def morphism_report(m: GradedMorphism) -> Report:
    r = Report("morphism")
    r.add("even Q_X = Q_Y odd", m.even @ m.source.q == m.target.q @ m.odd)
    r.add("odd P_X = P_Y even", m.odd @ m.source.p == m.target.p @ m.even)
    return r


def cmd_morphism_check(args):
    return morphism_report(_load(args.input, GradedMorphism))


def cmd_homotopy_search(args):
    psi = _load(args.psi, GradedMorphism)
    phi = _load(args.phi, GradedMorphism)
    return search_homotopy(psi, phi, args.max_degree)


def context_report(ctx: MoritaContext) -> Report:
    r = Report("morita-check")
    for label, ok in necessary_condition(ctx).checks:
        r.add(label, ok)
    r.add("eta1 = rho1 = 0", corollary_check(ctx))
    zd = zero_determinant_check(ctx.x, ctx.y)
    r.checks.extend(zd.checks)
    r.details.update(zd.details)
    if ctx.eta.is_zero() and ctx.rho.is_zero():
        r.checks.extend(verify_triangles(ctx).checks)
    else:
        r.details["triangle diagrams"] = "not checked: explicit diagram sides are required"
    return r


def cmd_morita_check(args):
    return context_report(_load(args.input, MoritaContext))


def cmd_report(args):
    obj = _load(args.input)
    if isinstance(obj, MatrixFactorization):
        return factorization_report(obj)
    if isinstance(obj, GradedMorphism):
        return morphism_report(obj)
    if isinstance(obj, MoritaContext):
        r = context_report(obj)
        ns = non_sufficiency_witness(obj, args.max_degree if args.max_degree is not None else 1)
        r.checks.extend(ns.report.checks)
        r.details.update(ns.report.details)
        r.name = "morita-report"
        return r
    raise DocumentError(f"{args.input}: no report for this document kind")


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    mf_in = _Parser(add_help=False)
    mf_in.add_argument("--input", help="factorization document")
    mf_in.add_argument("--f", help="polynomial")
    mf_in.add_argument("--p", help='matrix, e.g. "x,-y;y,x"')
    mf_in.add_argument("--q", help="matrix")

    parser = _Parser(prog="lgmorita", description="Matrix factorizations and Morita contexts of LG models.")
    parser.add_argument("--golden", action="store_true", help="rerun the bundled reference examples and diff the output")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("verify", parents=[fmt, mf_in], help="check P Q = Q P = f I and determinant facts")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pad", parents=[fmt, mf_in], help="enlarge a factorization with an identity block")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--variant", choices=[v.value for v in PadVariant], default=PadVariant.PUT_F_ON_P.value)
    p.set_defaults(func=cmd_pad)

    p = sub.add_parser("tensor", parents=[fmt], help="tensor product of two factorizations")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("det", parents=[fmt], help="determinant of a square matrix")
    p.add_argument("--matrix")
    p.add_argument("--input")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("delta", parents=[fmt], help="unit factorization of f(x) - f(x')")
    p.add_argument("--f", required=True)
    p.add_argument("--vars", help="comma-separated variable order")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("morphism-check", parents=[fmt], help="check the morphism equations")
    p.add_argument("input")
    p.set_defaults(func=cmd_morphism_check)

    p = sub.add_parser("homotopy-search", parents=[fmt], help="find a homotopy psi ~ phi of bounded degree")
    p.add_argument("--psi", required=True)
    p.add_argument("--phi", required=True)
    p.add_argument("--max-degree", type=int, default=DEFAULT_DEGREE_BOUND)
    p.set_defaults(func=cmd_homotopy_search)

    p = sub.add_parser("morita-check", parents=[fmt], help="necessary conditions for a Morita context")
    p.add_argument("input")
    p.set_defaults(func=cmd_morita_check)

    p = sub.add_parser("report", parents=[fmt], help="full report for a document")
    p.add_argument("input")
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(func=cmd_report)
    return parser


def _emit(result, fmt: str) -> str:
    return serialize.dumps(result) if fmt == "json" else serialize.render_text(result)


def run(argv: Sequence[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        if args.golden:
            return run_golden(stdout, stderr)
        if args.command is None:
            raise _Usage("a subcommand is required")
        result = args.func(args)
    except _Usage as exc:
        stderr.write(f"lgmorita: usage error: {exc}\n")
        return 2
    except (ParseError, DocumentError) as exc:
        stderr.write(f"lgmorita: {type(exc).__name__}: {exc}\n")
        return 2
    except NotFoundUpToD as exc:
        stderr.write(f"lgmorita: NotFoundUpToD: {exc}\n")
        return 1
    except (LGError, ValueError, ZeroDivisionError, IndexError) as exc:
        stderr.write(f"lgmorita: {type(exc).__name__}: {exc}\n")
        return 1
    stdout.write(_emit(result, args.format))
    if isinstance(result, Report) and not result.passed:
        return 1
    return 0


# ---------------------------------------------------------------- golden


def _golden_dir():
    return resources.files("lgmorita") / "golden"


def golden_cases():
    """``(name, argv, expected_text)`` for every bundled fixture."""
    root = _golden_dir()
    manifest = json.loads((root / "manifest.json").read_text(encoding="utf-8"))
    with resources.as_file(root) as base:
        for case in manifest["cases"]:
            argv = [str(Path(base) / a[1:]) if a.startswith("@") else a for a in case["args"]]
            yield case["name"], argv, (root / case["expected"]).read_text(encoding="utf-8")


def run_golden(stdout: TextIO, stderr: TextIO) -> int:
    failures = 0
    for name, argv, expected in golden_cases():
        out, err = io.StringIO(), io.StringIO()
        code = run(argv, out, err)
        got = out.getvalue()
        if code == 0 and got == expected:
            stdout.write(f"ok       {name}\n")
            continue
        failures += 1
        stdout.write(f"MISMATCH {name} (exit {code})\n")
        stdout.writelines(difflib.unified_diff(expected.splitlines(True), got.splitlines(True), "expected", "actual"))
        stderr.write(err.getvalue())
    stdout.write(f"{failures} of the golden cases differ\n" if failures else "all golden cases match\n")
    return 1 if failures else 0


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
