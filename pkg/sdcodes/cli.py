"""
Command line for the workbench.

Results are written to stdout and progress to stderr. The exit status is 0
on success, 1 on domain and I/O errors, 2 on usage errors.
"""
import argparse
import dataclasses
import sys
from contextlib import redirect_stderr, redirect_stdout
from typing import List, Optional, Sequence, TextIO, Tuple

from sympy import Rational

from .config import Settings
from .enumerators import GleasonType, as_rational, parse_anchor, parse_pin
from .errors import SdCodesError
from .handler import Handler, HandlerFactory
from .handler.console import Console
from .logging import create_logger
from .models import SearchConfig


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ValueError(f"expected a positive integer, got {text!r}")
    return value


def _assignment(text: str) -> Tuple[str, Rational]:
    name, _, value = text.partition("=")
    if not name.strip() or not value.strip():
        raise ValueError(f"expected NAME=VALUE, got {text!r}")
    return name.strip(), as_rational(value.strip())


def _add_code_input(parser: argparse.ArgumentParser):
    group = parser.add_argument_group("code input")
    group.add_argument("--spec", metavar="FILE", help="four-circulant spec file")
    group.add_argument(
        "--index", type=_positive, default=1, help="spec line to use, from 1"
    )
    group.add_argument("--generator", metavar="FILE", help="generator matrix file")
    group.add_argument(
        "--code",
        metavar="NAME",
        help="vendored code: c112, d112, e112, e8, golay24, n120:I, n128:I",
    )


def _add_family(parser: argparse.ArgumentParser):
    parser.add_argument("--n", type=_positive, required=True)
    parser.add_argument("--type", dest="gtype", type=GleasonType.parse, required=True)
    parser.add_argument("--min-weight", type=_positive, required=True)
    parser.add_argument(
        "--pin",
        type=parse_pin,
        action="append",
        default=[],
        help="extra constraint such as B0=0",
    )
    parser.add_argument(
        "--anchor",
        type=parse_anchor,
        action="append",
        default=[],
        help="anchor a parameter at a coefficient, such as e=B4",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdcodes", description="Workbench for binary self-dual codes."
    )
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--budget", type=_positive, help="codeword enumeration budget"
    )
    parser.add_argument("--threads", type=_positive, help="worker processes")
    parser.add_argument("--verbose", action="store_true", help="log to stderr")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    build = commands.add_parser("build", help="build a code and print its generator")
    _add_code_input(build)
    build.add_argument("--output", metavar="FILE")

    check = commands.add_parser("check", help="self-duality and parity class")
    _add_code_input(check)

    minweight = commands.add_parser("minweight", help="minimum-weight certificate")
    _add_code_input(minweight)
    minweight.add_argument("--early-stop", type=_positive)
    minweight.add_argument(
        "--search-target", type=_positive, help="look for a witness this light"
    )
    minweight.add_argument("--iterations", type=_positive, default=100)

    distribution = commands.add_parser("distribution", help="full weight distribution")
    _add_code_input(distribution)

    for name, text in (
        ("enumerate-weight", "codewords of one weight"),
        ("gram-invariant", "distinct entries of M^T M over codewords of one weight"),
    ):
        sub = commands.add_parser(name, help=text)
        _add_code_input(sub)
        sub.add_argument("--weight", type=int, required=True)
        sub.add_argument("--cap", type=_positive, default=1_000_000)

    gleason = commands.add_parser("gleason", help="weight enumerator algebra")
    algebra = gleason.add_subparsers(dest="gleason_command", metavar="COMMAND")
    algebra.required = True

    basis = algebra.add_parser("basis", help="Gleason basis polynomials")
    basis.add_argument("--n", type=_positive, required=True)
    basis.add_argument("--type", dest="gtype", type=GleasonType.parse, required=True)

    fit = algebra.add_parser("fit", help="Gleason coefficients of a distribution")
    fit.add_argument("file", metavar="FILE")
    fit.add_argument("--n", type=_positive, required=True)
    fit.add_argument("--type", dest="gtype", type=GleasonType.parse, required=True)

    shadow_of = algebra.add_parser("shadow", help="shadow enumerator")
    shadow_of.add_argument("--n", type=_positive, required=True)
    shadow_of.add_argument("values", type=as_rational, nargs="+", metavar="VALUE")

    solve = algebra.add_parser("solve-family", help="parameterised enumerator")
    _add_family(solve)

    substitute = algebra.add_parser("substitute", help="evaluate a family")
    _add_family(substitute)
    substitute.add_argument(
        "--set",
        dest="values",
        type=_assignment,
        action="append",
        default=[],
        help="parameter value such as a=-90664",
    )
    substitute.add_argument("--shadow", action="store_true")

    bound = algebra.add_parser("bound", help="doubly even minimum weight bound")
    bound.add_argument("--n", type=_positive, required=True)
    bound.add_argument("--d", type=_positive)

    shadow = commands.add_parser("shadow", help="shadow cosets of a singly even code")
    _add_code_input(shadow)
    shadow.add_argument("--search-target", type=_positive)
    shadow.add_argument("--iterations", type=_positive, default=100)

    neighbors = commands.add_parser("neighbors", help="doubly even neighbors")
    _add_code_input(neighbors)
    neighbors.add_argument(
        "--witness-budget",
        type=_positive,
        help="order the pair by their minimum-weight witnesses",
    )
    neighbors.add_argument(
        "--output-prefix", metavar="PREFIX", help="write PREFIX1.txt and PREFIX2.txt"
    )

    neighbor_x = commands.add_parser("neighbor-x", help="neighbor through a vector")
    _add_code_input(neighbor_x)
    neighbor_x.add_argument("--support", metavar="FILE", required=True)
    neighbor_x.add_argument("--strict", action="store_true")

    search = commands.add_parser("search", help="random four-circulant search")
    search.add_argument("--m", type=_positive, required=True)
    search.add_argument("--target-d", type=_positive, required=True)
    search.add_argument(
        "--any-parity",
        action="store_true",
        help="accept singly even codes as well",
    )
    search.add_argument("--max-candidates", type=_positive, default=1000)
    search.add_argument("--output", metavar="FILE")
    search.add_argument("--checkpoint-every", type=_positive, default=1)
    search.add_argument("--count-cap", type=_positive, default=1_000_000)
    search.add_argument("--distribution-cap", type=_positive, default=20)
    search.add_argument("--resume", action="store_true")
    return parser


def _code(handler: Handler, args: argparse.Namespace):
    return handler.load_code(args.spec, args.index, args.generator, args.code)


def _gleason(handler: Handler, args: argparse.Namespace):
    command = args.gleason_command
    if command == "basis":
        handler.gleason_basis(args.n, args.gtype)
    elif command == "fit":
        handler.gleason_fit(args.file, args.gtype, args.n)
    elif command == "shadow":
        handler.gleason_shadow(args.n, args.values)
    elif command == "solve-family":
        handler.solve_family(args.n, args.gtype, args.min_weight, args.pin, args.anchor)
    elif command == "substitute":
        handler.gleason_substitute(
            args.n,
            args.gtype,
            args.min_weight,
            dict(args.values),
            args.pin,
            args.anchor,
            shadow=args.shadow,
        )
    elif command == "bound":
        handler.gleason_bound(args.n, args.d)


def dispatch(handler: Handler, args: argparse.Namespace):
    command = args.command
    if command == "gleason":
        return _gleason(handler, args)
    if command == "search":
        config = SearchConfig(
            m=args.m,
            target_d=args.target_d,
            doubly_even_only=not args.any_parity,
            seed=args.seed,
            max_candidates=args.max_candidates,
            budget=args.budget or SearchConfig.budget,
            output=args.output,
            checkpoint_every=args.checkpoint_every,
            count_cap=args.count_cap,
            distribution_cap=args.distribution_cap,
            resume=args.resume,
        )
        return handler.search(config)
    code = _code(handler, args)
    if command == "build":
        handler.build(code, args.output)
    elif command == "check":
        handler.check(code)
    elif command == "minweight":
        handler.minweight(
            code,
            budget=args.budget,
            early_stop=args.early_stop,
            search_target=args.search_target,
            iterations=args.iterations,
            seed=args.seed,
        )
    elif command == "distribution":
        handler.distribution(code)
    elif command == "enumerate-weight":
        handler.enumerate_weight(code, args.weight, args.cap)
    elif command == "gram-invariant":
        handler.gram_invariant(code, args.weight, args.cap)
    elif command == "shadow":
        handler.shadow(code, args.search_target, args.iterations, args.seed)
    elif command == "neighbors":
        handler.neighbors(code, args.witness_budget, args.output_prefix)
    elif command == "neighbor-x":
        handler.neighbor_x(code, args.support, strict=args.strict)


def _attach_debugger(port: int):
    import debugpy

    debugpy.listen(port)
    debugpy.wait_for_client()


def run(
    argv: Optional[Sequence[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        with redirect_stdout(stdout), redirect_stderr(stderr):
            args = build_parser().parse_args(argv)
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else 2
    try:
        settings = Settings.from_env()
    except SdCodesError as e:
        stderr.write(f"error: {e}\n")
        return 1
    if args.budget:
        settings = dataclasses.replace(settings, minweight_budget=args.budget)
    if settings.debug_port:
        _attach_debugger(settings.debug_port)
    logger = create_logger(settings, verbose=args.verbose)
    threads = args.threads or settings.max_threads
    console = Console(logger, threads, stdout=stdout, stderr=stderr)
    handler = HandlerFactory.create(settings, logger, threads, console=console)
    try:
        dispatch(handler, args)
    except (SdCodesError, OSError) as e:
        logger.exception("Command %s failed", args.command)
        console.error(str(e))
        return 1
    finally:
        handler.close()
    return 0


def main(argv: Optional[List[str]] = None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))
