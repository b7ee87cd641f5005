"""Command-line front end.

Subcommands:
  eval    one momentum form at a single p, printed as a CSV record
  table   a form over a momentum grid, CSV with header p,re,im,abs2
  plot    unnormalized PP/LO densities over a grid, CSV with header p,density
  verify  run the verification suites, JSON report

Exit codes: 0 success/pass, 1 verification failure, 2 usage error,
3 I/O error.  All floating values are emitted with 17 significant
digits and a dot decimal separator.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .forms import FORM_EVALUATORS, distribution_max_l
from .hydrogenic import PhysicalScale, QuantumState
from .verification import SUITES, VerifyConfig, run_all

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


class UsageError(Exception):
    pass


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _scale_from_args(args, N: int) -> PhysicalScale:
    if getattr(args, "physical", False):
        return PhysicalScale.from_physical(
            args.Z, args.mu, args.alpha_fs, N, hbar=args.hbar, c=args.c)
    return PhysicalScale(hbar=1.0, beta=args.hbar_beta)


def _add_scale_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--hbar-beta", type=float, default=1.0,
                        help="momentum scale hbar*beta in scaled mode (default 1)")
    parser.add_argument("--physical", action="store_true",
                        help="derive beta from Z, mu, alpha-fs and N")
    parser.add_argument("--Z", type=int, default=1)
    parser.add_argument("--mu", type=float, default=1.0)
    parser.add_argument("--alpha-fs", type=float, default=1.0 / 137.035999)
    parser.add_argument("--hbar", type=float, default=1.0)
    parser.add_argument("--c", type=float, default=1.0)


def _state_from_args(args) -> QuantumState:
    try:
        return QuantumState(args.N, args.l, _scale_from_args(args, args.N))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _write_lines(path, lines) -> None:
    text = "\n".join(lines) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="\n") as handle:
            handle.write(text)


def cmd_eval(args) -> int:
    state = _state_from_args(args)
    value = FORM_EVALUATORS[args.form](state, args.p)
    record = ",".join(
        [_fmt(args.p), _fmt(value.real), _fmt(value.imag), _fmt(abs(value) ** 2)])
    _write_lines(args.output, [record])
    return EXIT_OK


def _grid_from_args(args) -> np.ndarray:
    if args.count < 2:
        raise UsageError("grid needs --count >= 2")
    if not args.pmin < args.pmax:
        raise UsageError("grid needs --pmin < --pmax")
    return np.linspace(args.pmin, args.pmax, args.count)


def cmd_table(args) -> int:
    state = _state_from_args(args)
    grid = _grid_from_args(args)
    evaluator = FORM_EVALUATORS[args.form]
    lines = ["p,re,im,abs2"]
    for p in grid:
        value = evaluator(state, p)
        lines.append(",".join(
            [_fmt(p), _fmt(value.real), _fmt(value.imag), _fmt(abs(value) ** 2)]))
    _write_lines(args.output, lines)
    return EXIT_OK


def cmd_plot(args) -> int:
    if args.N < 1:
        raise UsageError("N must be >= 1")
    scale = _scale_from_args(args, args.N)
    pmax = args.pmax if args.pmax is not None else 5.0 * scale.momentum
    if args.form == "PP":
        grid = np.linspace(0.0, pmax, args.count)
    else:
        grid = np.linspace(-pmax, pmax, args.count)
    lines = ["p,density"]
    for p in grid:
        lines.append(",".join(
            [_fmt(p), _fmt(distribution_max_l(args.form, args.N, p, scale))]))
    _write_lines(args.output, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    config = VerifyConfig(scale=PhysicalScale(hbar=1.0, beta=args.hbar_beta),
                          tol_scale=args.tol_scale)
    suites = args.suite if args.suite else None
    report = run_all(config, suites)
    _write_lines(args.output, [report.to_json()])
    return EXIT_OK if report.overall_pass else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hmomentum",
        description="Hydrogen radial wave functions in the momentum representation")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one form at a single p")
    p_eval.add_argument("form", choices=sorted(FORM_EVALUATORS))
    p_eval.add_argument("N", type=int)
    p_eval.add_argument("l", type=int)
    p_eval.add_argument("--p", type=float, required=True)
    p_eval.add_argument("--output", default=None)
    _add_scale_flags(p_eval)
    p_eval.set_defaults(func=cmd_eval)

    p_table = sub.add_parser("table", help="tabulate a form over a grid")
    p_table.add_argument("form", choices=sorted(FORM_EVALUATORS))
    p_table.add_argument("N", type=int)
    p_table.add_argument("l", type=int)
    p_table.add_argument("--pmin", type=float, required=True)
    p_table.add_argument("--pmax", type=float, required=True)
    p_table.add_argument("--count", type=int, default=101)
    p_table.add_argument("--output", default=None)
    _add_scale_flags(p_table)
    p_table.set_defaults(func=cmd_table)

    p_plot = sub.add_parser("plot", help="emit PP/LO density data")
    p_plot.add_argument("form", choices=["PP", "LO"])
    p_plot.add_argument("N", type=int)
    p_plot.add_argument("--pmax", type=float, default=None)
    p_plot.add_argument("--count", type=int, default=201)
    p_plot.add_argument("--output", default=None)
    _add_scale_flags(p_plot)
    p_plot.set_defaults(func=cmd_plot)

    p_verify = sub.add_parser("verify", help="run the verification suites")
    p_verify.add_argument("--suite", action="append", choices=sorted(SUITES),
                          help="suite to run (repeatable; default all)")
    p_verify.add_argument("--tol-scale", type=float, default=1.0,
                          help="multiply every tolerance (values > 1 loosen)")
    p_verify.add_argument("--hbar-beta", type=float, default=1.0)
    p_verify.add_argument("--output", default=None)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
