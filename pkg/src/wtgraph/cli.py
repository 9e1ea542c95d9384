"""Command-line interface.

Each subcommand parses its inputs, calls one library function and renders
the result.  Exit codes: 0 success, 1 usage or input error, 2 domain error
(NotInAlgebra, NotRealizable, ...).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import algebra, cospectral, spectral, threshold
from .exceptions import ThresholdGraphError
from .numkernel import TOL, format_scalar, matrix_from_csv, matrix_to_csv

EXIT_USAGE = 1
EXIT_DOMAIN = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_source(arg: str) -> str:
    """Inline JSON, ``-`` for stdin, or a file path."""
    if arg == "-":
        return sys.stdin.read()
    if arg.lstrip().startswith(("{", "[")):
        return arg
    try:
        return Path(arg).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {arg}: {exc.strerror}") from None


def _weights(arg: str, exact: bool) -> threshold.WeightVector:
    return threshold.WeightVector.from_json(_read_source(arg), exact=exact)


def _spectrum(arg: str, exact: bool) -> spectral.Spectrum:
    return spectral.Spectrum.from_json(_read_source(arg), exact=exact)


def _tol(args):
    return None if args.exact else args.tol


# -- subcommands -------------------------------------------------------------

def cmd_build(args) -> str:
    w = _weights(args.weights, args.exact)
    if args.dot:
        return threshold.to_dot(w)
    return matrix_to_csv(threshold.laplacian(w))


def cmd_spectrum(args) -> str:
    mu = spectral.spectrum_of(_weights(args.weights, args.exact))
    full = ", ".join(format_scalar(x) for x in mu.full())
    print(f"# eigenvalues incl. implied 0 (ascending): {full}", file=sys.stderr)
    return mu.to_json() + "\n"


def cmd_synth(args) -> str:
    return spectral.synthesize(_spectrum(args.spectrum, args.exact)).to_json() + "\n"


def cmd_mates(args) -> str:
    mates = spectral.cospectral_mates(_spectrum(args.spectrum, args.exact), args.limit)
    return "".join(w.to_json() + "\n" for w in mates)


def cmd_reconstruct(args) -> str:
    mu = _spectrum(args.spectrum, args.exact)
    alpha = cospectral.WeightAlphabet.parse(args.alphabet, exact=args.exact)
    return cospectral.reconstruct(mu, alpha, tol=args.tol).to_json() + "\n"


def cmd_product(args) -> str:
    a = _weights(args.left, args.exact)
    b = _weights(args.right, args.exact)
    return algebra.product(a, b).to_json() + "\n"


def cmd_power(args) -> str:
    w = algebra.basis_power(args.n, args.i, args.p)
    return threshold.WeightVector(w.weights, exact=args.exact).to_json() + "\n"


def cmd_member(args) -> str:
    text = _read_source(args.matrix)
    m = matrix_from_csv(text, exact=args.exact)
    return algebra.decompose(m, tol=_tol(args)).to_json() + "\n"


def cmd_basis(args) -> str:
    return matrix_to_csv(threshold.basis_matrix(args.n, args.i, exact=args.exact))


def cmd_counterexample(args) -> str:
    a, b = cospectral.counterexample_pair()
    if not args.exact:
        a = threshold.WeightVector(a.weights, exact=False)
        b = threshold.WeightVector(b.weights, exact=False)
    return a.to_json() + "\n" + b.to_json() + "\n"


# -- parser ------------------------------------------------------------------

def _global_flags(parser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--exact", action="store_true", default=default(False),
                        help="use exact rational arithmetic")
    parser.add_argument("--out", metavar="FILE", default=default(None),
                        help="write the result to FILE instead of stdout")
    parser.add_argument("--tol", type=float, default=default(TOL),
                        help="comparison tolerance in float mode (default 1e-9)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wtgraph", description="Spectral tools for weighted threshold graphs.")
    _global_flags(parser, suppress=False)
    common = _Parser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help):
        p = sub.add_parser(name, help=help, parents=[common])
        p.set_defaults(func=func)
        return p

    p = add("build", cmd_build, "weights -> Laplacian CSV (or DOT)")
    p.add_argument("--weights", required=True, help="weights JSON file, inline JSON, or -")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead of CSV")

    p = add("spectrum", cmd_spectrum, "weights -> spectrum JSON")
    p.add_argument("--weights", required=True)

    p = add("synth", cmd_synth, "spectrum -> weights JSON")
    p.add_argument("--spectrum", required=True, help="spectrum JSON file, inline JSON, or -")

    p = add("mates", cmd_mates, "spectrum -> cospectral weight vectors, one JSON per line")
    p.add_argument("--spectrum", required=True)
    p.add_argument("--limit", type=int, default=10)

    p = add("reconstruct", cmd_reconstruct, "spectrum + alphabet -> weights JSON")
    p.add_argument("--spectrum", required=True)
    p.add_argument("--alphabet", required=True, help="comma-separated weight values, at most three")

    p = add("product", cmd_product, "weights of the product of two Laplacians")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = add("power", cmd_power, "weights of Q_i^p")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--p", type=int, required=True)

    p = add("member", cmd_member, "decompose a matrix CSV into weights, or fail with NotInAlgebra")
    p.add_argument("--matrix", required=True, help="matrix CSV file or -")

    p = add("basis", cmd_basis, "basis Laplacian Q_i as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)

    add("counterexample", cmd_counterexample, "two cospectral, non-isomorphic weight vectors")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        output = args.func(args)
    except ThresholdGraphError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (UsageError, ValueError, IndexError, ZeroDivisionError) as exc:
        print(f"wtgraph {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        Path(args.out).write_text(output)
    else:
        sys.stdout.write(output)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
