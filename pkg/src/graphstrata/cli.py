"""Command-line front end for the censuses, quotients, and chart verifiers.

Exit codes are part of the contract: 0 for success or a positive verdict,
1 for a determinate negative verdict (an unstable graph, incompatible
charts, inequivalent markings, an invalid morphism, an unstable split
piece), 2 for bad input or an exceeded bound.  Repeated identical
invocations produce byte-identical output documents.

Graph arguments name JSON documents; descent arguments name sectioned
text documents.  An argument starting with "{" or "[" is read as an
inline document instead of a path.  The environment variable GS_MAX_SIZE
overrides the default bound on 3g-3+m for the enumeration commands.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .descent import (
    equivalent,
    parse_marking_document,
    parse_morphism_document,
    render_equivalence,
    render_morphism_report,
    render_star_report,
    verify_morphism,
    verify_star,
)
from .gamma import enumerate_gamma_strata, gamma_canonical_form, gamma_census_to_doc
from .limits import DEFAULT_MAX_DIM, MAX_GROUP_ORDER, MAX_PERM_DEGREE
from .perm import PermGroup, group_from_generators, parse_generators
from .stablegraph import (
    StableGraph,
    canonical_form,
    census_to_doc,
    check_stability,
    dumps,
    enumerate_stable_graphs,
    graph_from_doc,
    graph_to_doc,
    hilbert_numerology,
    num_nodes,
    split_component,
    stratum_dim,
)
from .strata import build_quotient_table, render_quotient_table

__all__ = ["main"]

SPLIT_FORMAT = "split-component/1"


def _positive(value: int, name: str) -> int:
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def _max_size(args: argparse.Namespace) -> int:
    if args.max_size is not None:
        return _positive(args.max_size, "--max-size")
    env = os.environ.get("GS_MAX_SIZE")
    if env is None:
        return DEFAULT_MAX_DIM
    try:
        value = int(env)
    except ValueError:
        raise ValueError(f"GS_MAX_SIZE must be an integer, got {env!r}") from None
    return _positive(value, "GS_MAX_SIZE")


def _max_m(args: argparse.Namespace) -> int:
    if args.max_m is not None:
        return _positive(args.max_m, "--max-m")
    return MAX_PERM_DEGREE


def _max_group_order(args: argparse.Namespace) -> int:
    if args.max_group_order is not None:
        return _positive(args.max_group_order, "--max-group-order")
    return MAX_GROUP_ORDER


def _resolve_group(text: str | None, m: int, args: argparse.Namespace) -> PermGroup:
    generators = parse_generators(text, m) if text else ()
    return group_from_generators(
        m,
        generators,
        max_degree=_max_m(args),
        max_order=_max_group_order(args),
    )


def _read_document(arg: str) -> tuple[str, str]:
    if arg.lstrip().startswith(("{", "[")):
        return arg, "<inline>"
    with open(arg, "r", encoding="utf-8") as fh:
        return fh.read(), arg


def _load_graph(arg: str) -> StableGraph:
    text, name = _read_document(arg)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{name}: {exc}") from None
    try:
        return graph_from_doc(doc)
    except ValueError as exc:
        raise ValueError(f"{name}: {exc}") from None


def _cmd_enumerate(args: argparse.Namespace) -> tuple[int, str]:
    census = enumerate_stable_graphs(
        args.g, args.m, max_dim=_max_size(args), max_legs=_max_m(args)
    )
    return 0, dumps(census_to_doc(census))


def _cmd_gamma_enumerate(args: argparse.Namespace) -> tuple[int, str]:
    group = _resolve_group(args.group, args.m, args)
    fused = enumerate_gamma_strata(args.g, args.m, group, max_dim=_max_size(args))
    return 0, dumps(gamma_census_to_doc(fused))


def _cmd_check_stability(args: argparse.Namespace) -> tuple[int, str]:
    graph = _load_graph(args.graph)
    report = check_stability(graph)
    lines = [
        f"genus={report.graph_genus} marks={report.marks}"
        f" nodes={num_nodes(graph)} dim={stratum_dim(graph)}"
    ]
    if report.violating_vertices:
        lines.append(
            "violating vertices: "
            + " ".join(f"v{v}" for v in report.violating_vertices)
        )
    if not report.stable_range:
        slack = 2 * report.graph_genus - 2 + report.marks
        lines.append(f"outside stable range: 2g-2+m = {slack}")
    lines.append("STABLE" if report.valid else "UNSTABLE")
    return (0 if report.valid else 1), "\n".join(lines) + "\n"


def _cmd_canon(args: argparse.Namespace) -> tuple[int, str]:
    graph = _load_graph(args.graph)
    if args.group is None:
        result = canonical_form(graph)
    else:
        group = _resolve_group(args.group, graph.m, args)
        result = gamma_canonical_form(graph, group)
    return 0, dumps(graph_to_doc(result))


def _cmd_split(args: argparse.Namespace) -> tuple[int, str]:
    graph = _load_graph(args.graph)
    piece = split_component(graph, args.vertex)
    kept = len(graph.legs_at(args.vertex))
    doc = {
        "format": SPLIT_FORMAT,
        "vertex": piece.vertex,
        "genus": piece.genus,
        "marks": piece.marks,
        "kept_labels": kept,
        "interchangeable": list(range(kept + 1, piece.marks + 1)),
        "group": None if piece.group is None else piece.group.generator_string(),
        "stable": piece.stable,
        "graph": graph_to_doc(piece.graph),
    }
    return (0 if piece.stable else 1), dumps(doc)


def _cmd_verify_descent(args: argparse.Namespace) -> tuple[int, str]:
    text, name = _read_document(args.file)
    marking = parse_marking_document(text, name)
    report = verify_star(marking)
    return (0 if report.valid else 1), render_star_report(marking, report)


def _cmd_equiv_descent(args: argparse.Namespace) -> tuple[int, str]:
    text1, name1 = _read_document(args.file1)
    text2, name2 = _read_document(args.file2)
    first = parse_marking_document(text1, name1)
    second = parse_marking_document(text2, name2)
    witness = equivalent(first, second)
    return (0 if witness is not None else 1), render_equivalence(
        first, second, witness
    )


def _cmd_verify_morphism(args: argparse.Namespace) -> tuple[int, str]:
    text, name = _read_document(args.file)
    morphism, source, target = parse_morphism_document(text, name)
    report = verify_morphism(morphism, source, target)
    return (0 if report.valid else 1), render_morphism_report(
        morphism, source, target, report
    )


def _cmd_quotient_table(args: argparse.Namespace) -> tuple[int, str]:
    group = _resolve_group(args.group, args.m, args)
    table = build_quotient_table(args.g, args.m, group, max_dim=_max_size(args))
    return 0, render_quotient_table(table)


def _cmd_numerology(args: argparse.Namespace) -> tuple[int, str]:
    data = hilbert_numerology(args.g, args.n, args.m)
    return 0, f"P(t)={data.polynomial_str()} N={data.ambient_dim} rank={data.rank}\n"


_HANDLERS = {
    "enumerate": _cmd_enumerate,
    "gamma-enumerate": _cmd_gamma_enumerate,
    "check-stability": _cmd_check_stability,
    "canon": _cmd_canon,
    "split": _cmd_split,
    "verify-descent": _cmd_verify_descent,
    "equiv-descent": _cmd_equiv_descent,
    "verify-morphism": _cmd_verify_morphism,
    "quotient-table": _cmd_quotient_table,
    "numerology": _cmd_numerology,
}

_GROUP_HELP = (
    'group generators in cycle notation, e.g. "(1 2),(3 4)";'
    " omitted means the trivial group"
)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-o",
        "--output",
        metavar="PATH",
        help="write the output document to this file instead of stdout",
    )
    common.add_argument(
        "--max-size",
        type=int,
        metavar="N",
        help="bound on 3g-3+m for enumeration (default: GS_MAX_SIZE or 6)",
    )
    common.add_argument(
        "--max-m",
        type=int,
        metavar="N",
        help="bound on the number of leg labels (default 10)",
    )
    common.add_argument(
        "--max-group-order",
        type=int,
        metavar="N",
        help="bound on the order of label groups (default 10!)",
    )

    parser = argparse.ArgumentParser(
        prog="graphstrata",
        description=(
            "Censuses of stable dual graphs, group quotients of their leg"
            " labelings, and verifiers for chart compatibility over finite"
            " covers."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    p = sub.add_parser(
        "enumerate",
        parents=[common],
        help="list all stable graph classes for (g, m)",
    )
    p.add_argument("g", type=int)
    p.add_argument("m", type=int)

    p = sub.add_parser(
        "gamma-enumerate",
        parents=[common],
        help="list graph classes for (g, m) fused under a label group",
    )
    p.add_argument("g", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--group", metavar="GENS", help=_GROUP_HELP)

    p = sub.add_parser(
        "check-stability",
        parents=[common],
        help="check a graph document for stability",
    )
    p.add_argument("graph", help="graph document (path or inline JSON)")

    p = sub.add_parser(
        "canon",
        parents=[common],
        help="canonical form of a graph, optionally up to a label group",
    )
    p.add_argument("graph", help="graph document (path or inline JSON)")
    p.add_argument("--group", metavar="GENS", help=_GROUP_HELP)

    p = sub.add_parser(
        "split",
        parents=[common],
        help="detach one vertex as a marked curve of its own",
    )
    p.add_argument("graph", help="graph document (path or inline JSON)")
    p.add_argument("--vertex", type=int, required=True, metavar="V")

    p = sub.add_parser(
        "verify-descent",
        parents=[common],
        help="check chart compatibility of a marking document",
    )
    p.add_argument("file", help="marking document (path or inline text)")

    p = sub.add_parser(
        "equiv-descent",
        parents=[common],
        help="decide whether two marking documents describe the same class",
    )
    p.add_argument("file1", help="marking document (path or inline text)")
    p.add_argument("file2", help="marking document (path or inline text)")

    p = sub.add_parser(
        "verify-morphism",
        parents=[common],
        help="check a fiberwise map between two marking documents",
    )
    p.add_argument("file", help="morphism document (path or inline text)")

    p = sub.add_parser(
        "quotient-table",
        parents=[common],
        help="labeled versus group-fused class counts per node count",
    )
    p.add_argument("g", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--group", metavar="GENS", help=_GROUP_HELP)

    p = sub.add_parser(
        "numerology",
        parents=[common],
        help="Hilbert polynomial data of the n-canonical embedding",
    )
    p.add_argument("g", type=int)
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        status, text = _HANDLERS[args.command](args)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return status


if __name__ == "__main__":
    sys.exit(main())
