"""Command-line front end for generation, decomposition, verification,
obstruction search, quasi-isometry conversion, and the exact oracle.

Every subcommand reads and writes the canonical text formats of the owning
modules, so identical inputs and flags produce byte-identical outputs.  File
arguments accept ``-`` for standard input or output.  Informational messages
go to standard error; files and query answers go to standard output.

Exit codes follow a fixed protocol so shell scripts need no output parsing:

* 0 -- success: graph generated, decomposition found, certificate valid,
  witness found, or bound confirmed.
* 1 -- a certificate failed verification.
* 2 -- malformed input or arguments.
* 3 -- a resource cap was hit before the question was settled.
* 10 -- a conclusive negative: the decomposition attempt was obstructed, the
  obstruction search proved absence, or the exact oracle proved every
  decomposition in the class wider than requested.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence, TypeVar

from .constructors import (
    Decomposed,
    DecomposeOutcome,
    decompose_cycle,
    decompose_path,
    decompose_star,
)
from .decomposition import format_decomposition, metrics, parse_decomposition, verify
from .errors import InputError
from .exact import AtMost, ExactCaps, ExceedsAll, Inconclusive, exact_width, exact_width_at_most
from .generators import basic, tree_of_wheels
from .graph import Graph, format_graph, parse_graph
from .metric import dec_to_qi, format_quasi_isometry, parse_quasi_isometry, qi_to_dec
from .obstructions import (
    CAP_HIT,
    EXHAUSTED,
    PATTERNS,
    SearchCaps,
    find_subdivision,
    format_witness,
    parse_witness,
    verify_witness,
)

__all__ = ["main"]

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_NEGATIVE = 10

_T = TypeVar("_T")

_DECOMPOSERS: dict[str, Callable[[Graph, int], DecomposeOutcome]] = {
    "path": decompose_path,
    "cycle": decompose_cycle,
    "star": decompose_star,
}

#: Families accepted by ``generate`` with their parameter counts.
_FAMILIES: dict[str, int] = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "star": 1,
    "grid": 2,
    "triangle": 0,
    "claw": 0,
    "wrench": 0,
    "tree-of-wheels": 2,
}


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="ascii") as handle:
            handle.write(text)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc


def _parse(path: str, parser: Callable[[str], _T]) -> _T:
    """Parse the file at ``path``, prefixing errors with the file name."""
    text = _read(path)
    try:
        return parser(text)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _note(message: str) -> None:
    print(message, file=sys.stderr)


def _cmd_generate(args: argparse.Namespace) -> int:
    family = args.family
    params = tuple(args.params)
    if len(params) != _FAMILIES[family]:
        raise InputError(
            f"family {family!r} takes {_FAMILIES[family]} parameter(s), got {len(params)}"
        )
    if family == "tree-of-wheels":
        g, _ = tree_of_wheels(params[0], params[1])
    else:
        g = basic(family, params)
    _write(args.output, format_graph(g))
    return EXIT_OK


def _cmd_decompose(args: argparse.Namespace) -> int:
    g = _parse(args.input, parse_graph)
    outcome = _DECOMPOSERS[args.decomposition_class](g, args.k)
    if isinstance(outcome, Decomposed):
        _write(args.output, format_decomposition(outcome.dec))
        width = metrics(g, outcome.dec).radial_width
        _note(
            f"decomposed: radial width {width} within the bound {outcome.claimed_bound}"
        )
        return EXIT_OK
    w = outcome.witness
    _write(args.output, format_witness(w))
    _note(f"obstructed: {w.pattern.name} subdivision with k={w.k}, c={w.c}")
    return EXIT_NEGATIVE


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _parse(args.input, parse_graph)
    text = _read(args.certificate)
    header = text.lstrip().split("\n", 1)[0].split()
    kind = header[0] if header else ""
    if kind == "decomposition":
        dec = parse_decomposition(text)
        report = verify(g, dec)
        if not report.ok:
            for violation in report.violations:
                _note(f"invalid: {violation}")
            return EXIT_INVALID
        numbers = metrics(g, dec)
        print(f"radial width: {numbers.radial_width}")
        print(f"outer radial width: {numbers.outer_radial_width}")
        print(f"radial spread: {numbers.radial_spread}")
        print(f"honest: {'yes' if numbers.honest else 'no'}")
        return EXIT_OK
    if kind == "witness":
        w = parse_witness(text)
        report = verify_witness(g, w)
        if not report.ok:
            for violation in report.violations:
                _note(f"invalid: {violation}")
            return EXIT_INVALID
        print(f"witness valid: {w.pattern.name} subdivision with k={w.k}, c={w.c}")
        return EXIT_OK
    raise InputError(
        f"{args.certificate}: unrecognised certificate header {kind!r}; "
        "expected 'decomposition' or 'witness'"
    )


def _cmd_obstruct(args: argparse.Namespace) -> int:
    g = _parse(args.input, parse_graph)
    caps = SearchCaps(max_steps=args.cap) if args.cap is not None else SearchCaps()
    result = find_subdivision(g, PATTERNS[args.pattern], args.k, args.c, caps)
    if result.status == EXHAUSTED:
        print("none(exhausted)")
        return EXIT_NEGATIVE
    if result.status == CAP_HIT:
        print("none(cap)")
        return EXIT_CAP
    assert result.witness is not None
    sys.stdout.write(format_witness(result.witness))
    return EXIT_OK


def _cmd_qi_from_dec(args: argparse.Namespace) -> int:
    g = _parse(args.input, parse_graph)
    dec = _parse(args.certificate, parse_decomposition)
    qi = dec_to_qi(g, dec)
    _write(args.output, format_quasi_isometry(qi))
    _note(f"quasi-isometry with m={qi.m}, a={qi.a}, M={qi.M}, A={qi.A}, r={qi.r}")
    return EXIT_OK


def _cmd_qi_to_dec(args: argparse.Namespace) -> int:
    g = _parse(args.input, parse_graph)
    h = _parse(args.host, parse_graph)
    qi = _parse(args.certificate, parse_quasi_isometry)
    dec = qi_to_dec(g, h, qi)
    _write(args.output, format_decomposition(dec))
    numbers = metrics(g, dec)
    _note(
        f"decomposition with outer radial width {numbers.outer_radial_width}, "
        f"radial spread {numbers.radial_spread}"
    )
    return EXIT_OK


def _cmd_exact(args: argparse.Namespace) -> int:
    g = _parse(args.input, parse_graph)
    caps = ExactCaps() if args.max_size is None else ExactCaps(max_vertices=args.max_size)
    if args.at_most is not None:
        result = exact_width_at_most(g, args.decomposition_class, args.at_most, caps)
        if isinstance(result, AtMost):
            print(f"at most {args.at_most}: yes")
            if args.output is not None:
                _write(args.output, format_decomposition(result.dec))
            return EXIT_OK
        if isinstance(result, ExceedsAll):
            print(f"at most {args.at_most}: no")
            return EXIT_NEGATIVE
        print(f"at most {args.at_most}: inconclusive ({result.caps_hit})")
        return EXIT_CAP
    result = exact_width(g, args.decomposition_class, caps)
    if isinstance(result, Inconclusive):
        print(f"exact width: inconclusive ({result.caps_hit})")
        return EXIT_CAP
    print(f"exact width: {result}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rdec",
        description=(
            "Decompose graphs into low-radius parts, certify obstructions, "
            "and cross-check the results exactly."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("generate", help="write a named example graph")
    p.add_argument("family", choices=sorted(_FAMILIES))
    p.add_argument("params", nargs="*", type=int, help="integer family parameters")
    p.add_argument("-o", "--output", default="-", help="output file (default stdout)")
    p.set_defaults(handler=_cmd_generate)

    p = sub.add_parser(
        "decompose",
        help="decompose a graph or certify an obstruction (exit 0 or 10)",
    )
    p.add_argument(
        "--class",
        dest="decomposition_class",
        required=True,
        choices=sorted(_DECOMPOSERS),
    )
    p.add_argument("-k", type=int, required=True, help="width parameter")
    p.add_argument("input", help="graph file")
    p.add_argument("-o", "--output", default="-", help="certificate file (default stdout)")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser(
        "verify",
        help="check a decomposition or witness certificate against a graph",
    )
    p.add_argument("input", help="graph file")
    p.add_argument("certificate", help="certificate file")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser(
        "obstruct",
        help="search for a fat subdivision of a pattern (exit 0, 10, or 3)",
    )
    p.add_argument("--pattern", required=True, choices=sorted(PATTERNS))
    p.add_argument("-k", type=int, required=True, help="subdivision coarseness")
    p.add_argument("-c", type=int, required=True, help="quasi-geodesic constant")
    p.add_argument("--cap", type=int, default=None, help="step budget for the search")
    p.add_argument("input", help="graph file")
    p.set_defaults(handler=_cmd_obstruct)

    p = sub.add_parser("qi", help="convert between decompositions and quasi-isometries")
    qi_sub = p.add_subparsers(dest="direction", required=True, metavar="direction")

    q = qi_sub.add_parser(
        "from-dec", help="read a quasi-isometry off an honest decomposition"
    )
    q.add_argument("input", help="graph file")
    q.add_argument("certificate", help="decomposition certificate")
    q.add_argument("-o", "--output", default="-", help="quasi-isometry certificate")
    q.set_defaults(handler=_cmd_qi_from_dec)

    q = qi_sub.add_parser(
        "to-dec", help="read a decomposition off a quasi-isometry"
    )
    q.add_argument("input", help="graph file")
    q.add_argument("host", help="decomposition graph file")
    q.add_argument("certificate", help="quasi-isometry certificate")
    q.add_argument("-o", "--output", default="-", help="decomposition certificate")
    q.set_defaults(handler=_cmd_qi_to_dec)

    p = sub.add_parser(
        "exact",
        help="exhaustive width oracle for tiny graphs (exit 0, 10, or 3)",
    )
    p.add_argument(
        "--class",
        dest="decomposition_class",
        required=True,
        choices=["cycle", "path", "star", "tree"],
    )
    p.add_argument("--at-most", type=int, default=None, help="test one radius bound")
    p.add_argument("--max-size", type=int, default=None, help="vertex-count cap")
    p.add_argument(
        "-o", "--output", default=None, help="write the found decomposition here"
    )
    p.add_argument("input", help="graph file")
    p.set_defaults(handler=_cmd_exact)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
