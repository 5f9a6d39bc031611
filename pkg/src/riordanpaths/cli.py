"""Command-line front end.

Exit status: 0 on success, 1 when a computation fails, 2 on usage errors
(bad flags, unreadable input files, malformed expressions).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import checks as checks_mod
from .characterization import AMatrixSpec, production_matrix, solve_f_from_amatrix, verify_amatrix
from .errors import ParseError, RiordanError
from .matrix import IntMatrix, matrix_from_json, render
from .parser import ps_parse
from .paths import LEVEL_RULES, REGIONS, StepSpec, count_paths, find_potential, parse_steps
from .riordan import (AlmostR, RArray, named_matrix, ra_apply, ra_rectify, ra_reverse, ra_stretch, ra_sums,
                      ra_triangulate, reverse_symmetrize, mat_binomial_conjugate)
from .series import Series, ps_solve_fixpoint
from .transforms import CFSpec, cf_eval, hankel, invert_transform, jfraction_extract, somos4_check

PROG = "riordanpaths"
DEF_SLACK = 8
DEFAULT_SIZE = 7


class UsageError(Exception):
    pass


class _OrderedDefs(argparse.Action):
    """Collect --def and --fix in command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        items = list(getattr(namespace, self.dest, None) or [])
        kind = "fix" if option_string == "--fix" else "def"
        items.append((kind, values))
        setattr(namespace, self.dest, items)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--order", type=int, help="truncation order (default max(2*size, 16))")
    p.add_argument("--size", type=int, help=f"matrix size / number of terms (default {DEFAULT_SIZE})")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--def", dest="defs", action=_OrderedDefs, metavar="NAME=EXPR",
                   help="define a named series (repeatable)")
    p.add_argument("--fix", dest="defs", action=_OrderedDefs, metavar="NAME=EXPR",
                   help="define NAME as the fixed point of NAME = EXPR (repeatable)")
    p.add_argument("--output", type=Path, help="write the result here instead of stdout")
    return p


RIORDAN_VIEWS = ("matrix", "rectified", "stretched", "reversal", "triangulated", "symmetrized",
                 "inverse", "row-sums", "diagonal-sums", "g", "f")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog=PROG, description="Exact Riordan arrays, lattice paths and series transforms.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", parents=[common], help="expand an expression as a power series")
    p.add_argument("expr")

    p = sub.add_parser("riordan", parents=[common], help="matrix of a Riordan array (g, f) and derived views")
    p.add_argument("--g", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--show", choices=RIORDAN_VIEWS, default="matrix")
    p.add_argument("--times", nargs=2, metavar=("G2", "F2"), help="right-multiply by the array (G2, F2) first")
    p.add_argument("--apply", metavar="EXPR", help="print g * a(f) for the series a instead of a matrix")

    p = sub.add_parser("almost", parents=[common], help="matrix of an almost Riordan array (a; g, f)")
    p.add_argument("--a", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--show", choices=("matrix", "row-sums"), default="matrix")

    p = sub.add_parser("paths", parents=[common], help="weighted lattice-path counts")
    p.add_argument("--spec", type=Path, help="step specification as JSON")
    p.add_argument("--steps", help='step set such as "{(1,0), 2*(1,1), (-1)*(2,1)}"')
    p.add_argument("--region", choices=REGIONS, default="triangle")
    p.add_argument("--level", action="append", default=[], metavar="L=STEPS",
                   help="step set used at level L (repeatable)")
    p.add_argument("--level-rule", choices=LEVEL_RULES, default="end")
    p.add_argument("--show", choices=("matrix", "left-factors", "potential"), default="matrix")

    p = sub.add_parser("production", parents=[common], help="production matrix and Z/A sequences")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--matrix", type=Path, help="lower-triangular matrix as JSON")
    src.add_argument("--g")
    p.add_argument("--f")
    p.add_argument("--show", choices=("matrix", "z", "a"), default="matrix")

    p = sub.add_parser("amatrix", parents=[common], help="solve f/x = sum c x^p f^q from an A-matrix")
    p.add_argument("--spec", type=Path, help="A-matrix specification as JSON")
    p.add_argument("--rows", help='A-matrix rows, e.g. "1,1;0,1"')
    p.add_argument("--rho", help='rho sequence, e.g. "1"')
    p.add_argument("--term", action="append", default=[], metavar="C,P,Q",
                   help="extra monomial c*x^p*u^q (repeatable)")
    p.add_argument("--show", choices=("f", "g", "matrix", "verify"), default="g",
                   help="f, g = f/x, the Bell matrix (g, f), or a recurrence check of that matrix")

    p = sub.add_parser("transform", parents=[common], help="Hankel, INVERT, continued fractions, Somos-4")
    p.add_argument("kind", choices=("hankel", "invert", "cf", "jfraction", "somos4", "named"))
    p.add_argument("input", nargs="?", help="sequence (comma separated), expression, or matrix name")
    p.add_argument("--cf", type=Path, help="continued fraction as JSON (for 'cf')")
    p.add_argument("--cf-kind", choices=("jacobi", "thron"))
    p.add_argument("--b", help="partial denominators, comma separated")
    p.add_argument("--lam", help="partial numerators, comma separated")
    p.add_argument("--depth", type=int, default=10)
    p.add_argument("--A", dest="somos_a", type=Fraction)
    p.add_argument("--B", dest="somos_b", type=Fraction)
    p.add_argument("--conjugate", type=int, metavar="A",
                   help="for 'named': substitute y -> y - A (right-multiply by the inverse binomial matrix)")

    p = sub.add_parser("check", parents=[common], help="run the built-in reproduction suite")
    p.add_argument("--criterion", type=int, action="append", choices=sorted(checks_mod.CRITERIA))
    p.add_argument("-v", "--verbose", action="store_true", help="print every check, not just the summary")
    return ap


# helpers


def _size(args) -> int:
    size = args.size if args.size is not None else DEFAULT_SIZE
    if size < 1:
        raise UsageError("--size must be at least 1")
    return size


def _order(args) -> int:
    order = args.order if args.order is not None else max(2 * _size(args), 16)
    if order < 1:
        raise UsageError("--order must be at least 1")
    return order


def _split_def(text: str) -> tuple[str, str]:
    name, sep, expr = text.partition("=")
    name = name.strip()
    if not sep or not name.isidentifier() or name == "x":
        raise UsageError(f"expected NAME=EXPR, got {text!r}")
    return name, expr


def _symbols(args, order: int) -> dict[str, Series]:
    env: dict[str, Series] = {}
    work = order + DEF_SLACK
    for kind, text in args.defs or []:
        name, expr = _split_def(text)
        if kind == "def":
            env[name] = ps_parse(expr, work, env)
        else:
            env[name] = ps_solve_fixpoint(expr, work, var=name, symbols=env)
    return env


def _ints_or_rats(values) -> list:
    out = []
    for v in values:
        v = Fraction(v)
        out.append(v.numerator if v.denominator == 1 else v)
    return out


def _parse_list(text: str | None, what: str) -> list[Fraction]:
    if text is None:
        raise UsageError(f"{what} is required")
    try:
        return [Fraction(t.strip()) for t in text.replace(";", ",").split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"cannot read {what} from {text!r}") from None


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _coeffs(s: Series, n: int) -> list:
    return _ints_or_rats(s.truncate(min(n, s.order)).coeffs)


# commands


def cmd_series(args):
    order = _order(args)
    env = _symbols(args, order)
    s = ps_parse(args.expr, order, env)
    return _coeffs(s, order)


def cmd_riordan(args):
    order = _order(args)
    env = _symbols(args, order)
    R = RArray.parse(args.g, args.f, order, env)
    if args.times:
        R = R * RArray.parse(args.times[0], args.times[1], order, env)
    n = _size(args)
    if args.apply:
        return _coeffs(ra_apply(R, ps_parse(args.apply, order, env)), n)
    view = args.show
    if view == "matrix":
        return R.matrix(n)
    if view == "rectified":
        return ra_rectify(R, n)
    if view == "stretched":
        return ra_stretch(R).matrix(n)
    if view == "reversal":
        return ra_reverse(R, n)
    if view == "triangulated":
        return ra_triangulate(R).matrix(n)
    if view == "symmetrized":
        return reverse_symmetrize(R, n)
    if view == "inverse":
        return R.inverse().matrix(n)
    if view == "row-sums":
        return ra_sums(R, "row", n)
    if view == "diagonal-sums":
        return ra_sums(R, "diagonal", n)
    return _coeffs(R.g if view == "g" else R.f, n)


def cmd_almost(args):
    order = _order(args)
    env = _symbols(args, order)
    M = AlmostR.parse(args.a, args.g, args.f, order, env).matrix(_size(args))
    return M.row_sums() if args.show == "row-sums" else M


def _step_spec(args) -> StepSpec:
    if args.spec:
        if args.steps or args.level:
            raise UsageError("--spec cannot be combined with --steps or --level")
        try:
            return StepSpec.from_json(_read(args.spec))
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise UsageError(f"{args.spec}: not a step specification ({exc})") from None
    if not args.steps:
        raise UsageError("give --spec or --steps")
    levels = {}
    for item in args.level:
        lvl, sep, steps = item.partition("=")
        if not sep:
            raise UsageError(f"--level expects L=STEPS, got {item!r}")
        try:
            levels[int(lvl)] = parse_steps(steps)
        except ValueError as exc:
            raise UsageError(f"--level {item!r}: {exc}") from None
    try:
        return StepSpec(parse_steps(args.steps), args.region, levels, args.level_rule)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_paths(args):
    spec = _step_spec(args)
    if args.show == "potential":
        p = find_potential(spec)
        return [p.alpha, p.beta]
    M = count_paths(spec, _size(args))
    return M.row_sums() if args.show == "left-factors" else M


def cmd_production(args):
    n = _size(args)
    if args.matrix:
        try:
            M = matrix_from_json(_read(args.matrix))
        except (ValueError, TypeError) as exc:
            raise UsageError(f"{args.matrix}: not an integer matrix ({exc})") from None
    else:
        if not args.f:
            raise UsageError("--g needs --f")
        order = _order(args)
        M = RArray.parse(args.g, args.f, max(order, n + 1), _symbols(args, order)).matrix(n + 1)
    P = production_matrix(M, n)
    if args.show == "z":
        return P.z
    if args.show == "a":
        return P.a
    return _rat_matrix(P.entries)


def _rat_matrix(entries):
    try:
        return IntMatrix(entries)
    except RiordanError:
        return [[str(v) for v in r] for r in entries]


def _amatrix_spec(args) -> AMatrixSpec:
    if args.spec:
        try:
            return AMatrixSpec.from_json(_read(args.spec))
        except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
            raise UsageError(f"{args.spec}: not an A-matrix specification ({exc})") from None
    rows = []
    if args.rows:
        for r in args.rows.split(";"):
            rows.append(_parse_list(r, "--rows"))
    rho = _parse_list(args.rho, "--rho") if args.rho else []
    terms = []
    for t in args.term:
        parts = t.split(",")
        if len(parts) != 3:
            raise UsageError(f"--term expects C,P,Q, got {t!r}")
        try:
            terms.append((Fraction(parts[0]), int(parts[1]), int(parts[2])))
        except ValueError:
            raise UsageError(f"--term expects C,P,Q, got {t!r}") from None
    if not rows and not terms:
        raise UsageError("give --spec, --rows or --term")
    return AMatrixSpec(tuple(rows), tuple(rho), tuple(terms))


def cmd_amatrix(args):
    spec = _amatrix_spec(args)
    order = _order(args)
    f = solve_f_from_amatrix(spec, max(order, _size(args) + 1))
    if args.show == "f":
        return _coeffs(f, _size(args))
    g = f.shift(-1)
    if args.show == "g":
        return _coeffs(g, _size(args))
    M = RArray.bell(g).matrix(_size(args))
    if args.show == "matrix":
        return M
    return ["true" if verify_amatrix(M, spec) else "false"]


def _cf_spec(args) -> CFSpec:
    if args.cf:
        try:
            return CFSpec.from_json(_read(args.cf))
        except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
            raise UsageError(f"{args.cf}: not a continued fraction ({exc})") from None
    if not args.cf_kind:
        raise UsageError("give --cf or --cf-kind with --b and --lam")
    return CFSpec(args.cf_kind, tuple(_parse_list(args.b, "--b")), tuple(_parse_list(args.lam, "--lam")))


def cmd_transform(args):
    kind = args.kind
    if kind == "cf":
        return _coeffs(cf_eval(_cf_spec(args), _order(args)), _order(args))
    if args.input is None:
        raise UsageError(f"transform {kind} needs an input")
    if kind == "hankel":
        seq = _parse_list(args.input, "the sequence")
        return hankel(seq, (len(seq) + 1) // 2 if args.size is None else _size(args))
    if kind == "somos4":
        if args.somos_a is None or args.somos_b is None:
            raise UsageError("somos4 needs --A and --B")
        ok = somos4_check(_parse_list(args.input, "the sequence"), args.somos_a, args.somos_b)
        return ["true" if ok else "false"]
    if kind == "named":
        M = named_matrix(args.input, _size(args))
        if args.conjugate is not None:
            M = mat_binomial_conjugate(M, args.conjugate, transpose=False)
        return M
    order = _order(args)
    env = _symbols(args, order)
    if kind == "invert":
        return _coeffs(invert_transform(ps_parse(args.input, order, env)), order)
    g = ps_parse(args.input, max(order, 2 * args.depth + 1), env)
    spec = jfraction_extract(g, args.depth)
    return {"b": _ints_or_rats(spec.b), "lam": _ints_or_rats(spec.lam)}


def cmd_check(args):
    results = checks_mod.run_checks(args.criterion)
    lines = []
    if args.verbose:
        for r in results:
            lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.id} ({r.seconds:.2f}s) {r.detail}")
    for crit, (ok, npass, total) in checks_mod.summarize(results).items():
        lines.append(f"{'PASS' if ok else 'FAIL'} criterion {crit}: {checks_mod.CRITERIA[crit]} ({npass}/{total})")
    failed = [r for r in results if not r.passed]
    if failed and not args.verbose:
        lines.extend(f"  FAIL {r.id}: {r.detail}" for r in failed)
    return _CheckReport("\n".join(lines), not failed)


class _CheckReport:
    def __init__(self, text: str, ok: bool):
        self.text, self.ok = text, ok


COMMANDS = {
    "series": cmd_series,
    "riordan": cmd_riordan,
    "almost": cmd_almost,
    "paths": cmd_paths,
    "production": cmd_production,
    "amatrix": cmd_amatrix,
    "transform": cmd_transform,
    "check": cmd_check,
}


def format_result(result, fmt: str) -> str:
    if isinstance(result, dict):
        if fmt == "json":
            return json.dumps({k: [str(v) for v in vals] for k, vals in result.items()})
        return "\n".join(f"{k}: {render(v, fmt)}" for k, v in result.items())
    if result and isinstance(result[0], list):
        # rational matrix, entries already strings
        if fmt == "json":
            return json.dumps(result)
        sep = "," if fmt == "csv" else " "
        return "\n".join(sep.join(r) for r in result)
    return render(result, fmt)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = COMMANDS[args.command](args)
    except (UsageError, ParseError) as exc:
        print(f"{PROG} {args.command}: {exc}", file=sys.stderr)
        return 2
    except (RiordanError, ArithmeticError) as exc:
        print(f"{PROG} {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if isinstance(result, _CheckReport):
        text, status = result.text, 0 if result.ok else 1
    else:
        text, status = format_result(result, args.format), 0
    if args.output:
        try:
            args.output.write_text(text + "\n")
        except OSError as exc:
            print(f"{PROG}: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
            return 2
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
