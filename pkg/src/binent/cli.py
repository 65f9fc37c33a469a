"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 solver
non-convergence. Numbers are printed with 17 significant digits so that
doubles round-trip through text; tables are CSV with LF line endings.
"""
import argparse
import contextlib
import sys

from .analysis import SweepConfig, figure_data, sweep, sweep_table
from .approximations import Method, invert
from .entropy import Unit, binary_entropy
from .exact import Branch, InversionResult, SolverConfig
from .exceptions import ConfigError, DomainError, NonConvergenceError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_NONCONVERGENCE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt(x):
    # + 0.0 turns -0.0 into 0.0
    return format(x + 0.0, ".17g")


def write_csv(table, stream):
    stream.write(",".join(table.columns) + "\n")
    for row in table.rows:
        stream.write(",".join(fmt(v) for v in row) + "\n")


def _methods(text):
    try:
        return tuple(Method(t.strip()) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown method in {text!r}") from None


def build_parser():
    parser = _Parser(
        prog="binent",
        description="Binary entropy, its inverse, and closed-form estimates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    units = [u.value for u in Unit]

    p = sub.add_parser("entropy", help="binary entropy of a probability")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--unit", choices=units, default="nats")

    p = sub.add_parser("invert", help="probabilities with a given entropy")
    p.add_argument("--h", type=float, required=True)
    p.add_argument("--unit", choices=units, default="nats")
    p.add_argument("--method", choices=["exact", "kc", "improved"], required=True)
    p.add_argument("--branch", choices=[b.value for b in Branch], default="lower")
    p.add_argument("--tol", type=float, default=SolverConfig.abs_tol_p,
                   help="absolute tolerance in p for --method exact")

    p = sub.add_parser("sweep", help="estimate errors over an entropy grid (CSV)")
    p.add_argument("--h-min", type=float, default=SweepConfig.h_min)
    p.add_argument("--h-max", type=float, default=SweepConfig.h_max)
    p.add_argument("--step", type=float, default=SweepConfig.step)
    p.add_argument("--methods", type=_methods, default="kc,improved")
    p.add_argument("--relative", action="store_true",
                   help="append relative-error columns")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("figure", help="data for figure 1 (branches) or 2 (errors)")
    p.add_argument("--which", type=int, choices=[1, 2], required=True)
    p.add_argument("--step", type=float, default=SweepConfig.step)
    p.add_argument("--out", metavar="PATH")
    return parser


def _emit_table(table, path, stdout):
    if path is None:
        write_csv(table, stdout)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        write_csv(table, fh)


def _run(args, stdout):
    if args.command == "entropy":
        stdout.write(fmt(binary_entropy(args.p, args.unit)) + "\n")
    elif args.command == "invert":
        solver = SolverConfig(abs_tol_p=args.tol)
        result = invert(args.h, args.method, args.branch, args.unit, solver)
        if isinstance(result, InversionResult):
            stdout.write(f"{fmt(result.lower)},{fmt(result.upper)}\n")
        else:
            stdout.write(fmt(result) + "\n")
    elif args.command == "sweep":
        cfg = SweepConfig(h_min=args.h_min, h_max=args.h_max, step=args.step,
                          methods=args.methods, relative=args.relative)
        _emit_table(sweep_table(sweep(cfg)), args.out, stdout)
    else:
        cfg = SweepConfig(step=args.step)
        _emit_table(figure_data(args.which, cfg), args.out, stdout)


def main(argv=None, stdout=None, stderr=None):
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        _run(args, stdout)
    except ConfigError as exc:
        print(f"binent: error: {exc}", file=stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"binent: domain error: {exc}", file=stderr)
        return EXIT_DOMAIN
    except NonConvergenceError as exc:
        print(f"binent: solver did not converge: {exc}", file=stderr)
        return EXIT_NONCONVERGENCE
    return EXIT_OK


def main_entry():
    sys.exit(main())
