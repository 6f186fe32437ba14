"""Command-line interface: ``gameprov <subcommand> FILE ...``.

Exit codes: 0 success, 1 usage or parse error, 2 validation failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import TextIO

from .argumentation import ArgumentationFramework, af_to_game, argument_provenance, grounded_labeling
from .formats import (
    ParseError,
    export_af_dot,
    export_af_json,
    export_dot,
    export_json,
    parse_apx,
    parse_edge_list,
    parse_graph_json,
    parse_solved_json,
    render_apx,
    render_edge_list,
)
from .graph import GameGraph, GraphError
from .provenance import match_rpq, provenance
from .rpq import MalformedExpression, parse_rpq
from .solver import solve, solve_fast, validate_solution


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2
        raise UsageError(message)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _format_of(path: str, given: str | None) -> str:
    if given:
        return given
    suffix = Path(path).suffix.lower()
    return {".apx": "apx", ".json": "json"}.get(suffix, "edgelist")


def load_game(path: str, fmt: str | None = None) -> GameGraph:
    text = _read(path)
    match _format_of(path, fmt):
        case "apx":
            return af_to_game(parse_apx(text))
        case "json":
            return parse_graph_json(text)
    return parse_edge_list(text)


def load_af(path: str, fmt: str | None = None) -> ArgumentationFramework:
    text = _read(path)
    match _format_of(path, fmt):
        case "apx":
            return parse_apx(text)
        case "json":
            g = parse_graph_json(text)
        case _:
            g = parse_edge_list(text)
    # Edges of a plain graph are read as attacks.
    return ArgumentationFramework.build(g.positions, g.moves)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gameprov", description="Solve win-move games and explain their values.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", help="input path, or - for stdin")
        sp.add_argument("--from", dest="input_format", choices=["edgelist", "apx", "json"])
        return sp

    sp = add("solve", "solve a game graph")
    sp.add_argument("--format", choices=["json", "dot"], default="json")

    add("trace", "print the red/green rule steps")

    sp = add("prov", "provenance subgraph of one position")
    sp.add_argument("--node", required=True)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--kind", choices=["potential", "actual", "primary"])
    group.add_argument("--rpq", help='path query, e.g. "W.(L.W)*"')
    sp.add_argument("--format", choices=["json", "dot"], default="json")

    sp = add("af", "grounded labeling of an argumentation framework")
    sp.add_argument("--explain", metavar="ID")
    sp.add_argument("--kind", choices=["actual", "primary"], default="primary")
    sp.add_argument("--format", choices=["json", "dot"], default="json")

    sp = add("validate", "check a solution")
    sp.add_argument(
        "--labeled", action="store_true", help="input is a labeled JSON game; check it as given"
    )

    sp = add("convert", "convert between graph formats")
    sp.add_argument("--to", required=True, choices=["json", "dot", "apx", "edgelist"])
    return p


def _export(obj, fmt: str, af: bool = False) -> str:
    return export_dot(obj, af=af) if fmt == "dot" else export_json(obj, af=af)


def run(argv: list[str], stdout: TextIO, stderr: TextIO) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _dispatch(args, stdout)
    except UsageError as exc:
        stderr.write(f"gameprov: usage error: {exc}\n")
    except (ParseError, GraphError, MalformedExpression, OSError) as exc:
        stderr.write(f"gameprov: error: {exc}\n")
    return 1


def _dispatch(args: argparse.Namespace, out: TextIO) -> int:
    cmd = args.command
    if cmd == "af":
        af = load_af(args.file, args.input_format)
        if args.explain is not None:
            out.write(_export(argument_provenance(af, args.explain, args.kind), args.format, af=True))
        elif args.format == "dot":
            out.write(export_af_dot(af, grounded_labeling(af)))
        else:
            out.write(export_af_json(af, grounded_labeling(af)))
        return 0

    if cmd == "validate" and args.labeled:
        solved = parse_solved_json(_read(args.file))
    else:
        g = load_game(args.file, args.input_format)
        if cmd == "convert":
            out.write(_convert(g, args.to))
            return 0
        if cmd == "trace":
            out.write("".join(line + "\n" for line in solve(g)[1].lines()))
            return 0
        solved = solve_fast(g)

    if cmd == "solve":
        out.write(_export(solved, args.format))
    elif cmd == "prov":
        if args.rpq is not None:
            sub = match_rpq(solved, args.node, parse_rpq(args.rpq))
        else:
            sub = provenance(solved, args.node, args.kind)
        out.write(_export(sub, args.format))
    elif cmd == "validate":
        problems = validate_solution(solved)
        if problems:
            out.write("".join(f"{v}\n" for v in problems))
            return 2
        out.write("ok\n")
    return 0


def _convert(g: GameGraph, to: str) -> str:
    if to == "apx":
        return render_apx(ArgumentationFramework.from_game(g))
    if to == "edgelist":
        return render_edge_list(g)
    return export_dot(g) if to == "dot" else export_json(g)


def main(argv: list[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv, sys.stdout, sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
