"""Command-line front end: ``ellipsum {ctx,eval,verify,list,special}``.

Exit codes: 0 success, 1 verification failure, 2 bad flags or arguments,
3 internal error.
"""
from __future__ import annotations

import argparse
import csv
import sys
from fractions import Fraction

from ellipsum import corpus, hypersum
from ellipsum.elliptic_core import Modulus, build_context
from ellipsum.errors import DomainError, EllipsumError
from ellipsum.hypersum import Index, Kernel, SignPattern, SumSpec
from ellipsum.singular import elliptic_alpha, gamma_quarter, singular_modulus

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
DEFAULT_TOL = 1e-10
CSV_HEADER = ("id", "lhs", "rhs", "abs_err", "rel_err", "terms", "status")


class UsageError(Exception):
    pass


def _fmt(x: float) -> str:
    return f"{x:.15g}"


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational p/q: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"scale must be positive: {text!r}")
    return value


def _add_modulus(p: argparse.ArgumentParser, required: bool = True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--r", type=int, help="singular value index (K'/K = sqrt(r))")
    g.add_argument("--k", help="modulus as a decimal in (0, 1)")


def _context(args):
    if args.r is not None:
        if args.r < 1:
            raise UsageError(f"--r must be a positive integer, got {args.r}")
        return singular_modulus(args.r).context()
    try:
        return build_context(Modulus(float(args.k)))
    except (ValueError, DomainError) as exc:
        raise UsageError(f"--k: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellipsum",
        description="Elliptic integrals, Jacobi functions and hyperbolic lattice sums.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ctx", help="print k, k', K, E, K', E', q at a modulus")
    _add_modulus(p)

    p = sub.add_parser("eval", help="evaluate one lattice sum")
    p.add_argument("--index", choices=[i.value for i in Index], required=True)
    p.add_argument("--s", type=int, required=True, help="power of m")
    p.add_argument("--sign", choices=[s.value for s in SignPattern], required=True)
    p.add_argument("--kernel", choices=[k.value for k in Kernel], required=True)
    p.add_argument("--scale", type=_fraction, default=Fraction(1), help="argument scale a, p/q")
    p.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)
    p.add_argument("--d-dk", action="store_true", help="term-by-term derivative in k instead")
    _add_modulus(p)

    p = sub.add_parser("verify", help="verify every corpus record")
    p.add_argument("--corpus", help="corpus file (default: the shipped corpus)")
    p.add_argument("--tol", type=_positive_float, help="override every record's tolerance")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--jobs", type=int, default=1, help="records verified concurrently")

    p = sub.add_parser("list", help="list corpus ids and anchors")
    p.add_argument("--corpus")

    p = sub.add_parser("special", help="special constants")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--gamma4", action="store_true", help="Gamma(1/4)")
    g.add_argument("--alpha", type=int, metavar="R", help="elliptic alpha function at r")
    g.add_argument("--singular", type=int, metavar="R", help="singular modulus k_r")
    return parser


def _load(path):
    if path is None:
        return corpus.shipped_corpus()
    try:
        return corpus.load_corpus(path)
    except OSError as exc:
        raise UsageError(f"cannot read corpus: {exc}") from None


def cmd_ctx(args, out):
    ctx = _context(args)
    for name, value in (("k", ctx.k), ("k'", ctx.k_prime), ("K", ctx.K), ("E", ctx.E),
                        ("K'", ctx.K_prime), ("E'", ctx.E_prime), ("q", ctx.q),
                        ("K'/K", ctx.ratio)):
        print(f"{name:5s}= {_fmt(value)}", file=out)
    return EXIT_OK


def cmd_eval(args, out):
    if args.s < 0:
        raise UsageError("--s must be nonnegative")
    spec = SumSpec(Index(args.index), args.s, SignPattern(args.sign), Kernel(args.kernel),
                   args.scale)
    ctx = _context(args)
    if args.d_dk:
        try:
            res = hypersum.d_dk_sum(spec, ctx, args.tol)
        except DomainError as exc:
            raise UsageError(str(exc)) from None
    else:
        res = hypersum.evaluate(spec, ctx, args.tol)
    print(f"spec  = {spec.render()}", file=out)
    print(f"value = {_fmt(res.value)}", file=out)
    print(f"terms = {res.terms_used}", file=out)
    print(f"tail  = {_fmt(res.tail_bound)}", file=out)
    return EXIT_OK


def cmd_verify(args, out):
    records = _load(args.corpus)
    reports = corpus.verify_all(records, args.tol, max(1, args.jobs))
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in reports:
            w.writerow([r.id, repr(r.lhs_value), repr(r.rhs_value), repr(r.abs_err),
                        repr(r.rel_err), r.terms_used, r.status])
    else:
        width = max((len(r.id) for r in reports), default=2)
        for r in reports:
            line = (f"{r.id:<{width}}  {r.status:5s}  lhs={_fmt(r.lhs_value)}  "
                    f"rhs={_fmt(r.rhs_value)}  abs_err={r.abs_err:.3g}  "
                    f"rel_err={r.rel_err:.3g}  terms={r.terms_used}")
            if r.message:
                line += f"  ({r.message})"
            print(line, file=out)
        passed = sum(r.passed for r in reports)
        print(f"{passed}/{len(reports)} passed", file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_list(args, out):
    for r in _load(args.corpus):
        print(f"{r.id}\t{r.anchor}", file=out)
    return EXIT_OK


def cmd_special(args, out):
    if args.gamma4:
        print(_fmt(gamma_quarter()), file=out)
        return EXIT_OK
    r = args.alpha if args.alpha is not None else args.singular
    if r < 1:
        raise UsageError("r must be a positive integer")
    if args.alpha is not None:
        print(_fmt(elliptic_alpha(r)), file=out)
    else:
        print(_fmt(singular_modulus(r).k_r), file=out)
    return EXIT_OK


COMMANDS = {"ctx": cmd_ctx, "eval": cmd_eval, "verify": cmd_verify,
            "list": cmd_list, "special": cmd_special}


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, EllipsumError) as exc:
        print(f"ellipsum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - last-resort guard for exit code 3
        print(f"ellipsum: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
