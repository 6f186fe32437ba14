"""Text formats: edge lists, APX frameworks, solved-game JSON and DOT.

All writers are byte-deterministic: arrays are sorted, JSON uses compact
separators, infinite lengths are written as the string ``"inf"``, and
output ends with a single newline.
"""

from __future__ import annotations

import json
import re
from collections.abc import Mapping

from .argumentation import FROM_VALUE, AfLabel, ArgumentationFramework
from .graph import GameGraph, GraphError, InvalidPositionId, build_graph, check_position_id
from .provenance import ProvenanceSubgraph
from .solver import INF, EdgeAnnotation, EdgeType, Length, NodeLabel, SolvedGame, Value


class ParseError(ValueError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class UndeclaredArgument(ParseError):
    pass


# -- edge lists ---------------------------------------------------------------


def parse_edge_list(text: str) -> GameGraph:
    positions, moves = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        words = raw.split("#", 1)[0].split()
        try:
            if not words:
                continue
            if words[0] == "node" and len(words) == 2:
                positions.append(check_position_id(words[1]))
            elif len(words) == 2:
                moves.append((check_position_id(words[0]), check_position_id(words[1])))
            else:
                raise ParseError(lineno, f"expected 'src dst' or 'node id', got {raw.strip()!r}")
        except InvalidPositionId as exc:
            raise ParseError(lineno, str(exc)) from None
    return build_graph(positions, moves)


def render_edge_list(g: GameGraph) -> str:
    """Canonical edge list: isolated positions first, then sorted moves."""
    touched = {v for m in g.moves for v in m}
    lines = [f"node {x}" for x in g.positions if x not in touched]
    lines += [f"{x} {y}" for x, y in g.moves]
    return "".join(line + "\n" for line in lines)


# -- APX ----------------------------------------------------------------------

_APX = re.compile(r"\s*(arg|att)\s*\(([^()]*)\)\s*\.")


def parse_apx(text: str) -> ArgumentationFramework:
    args: list[str] = []
    attacks: list[tuple[str, str, int]] = []
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, 1):
        body = raw.split("%", 1)[0]
        pos = 0
        while body[pos:].strip():
            m = _APX.match(body, pos)
            if not m:
                raise ParseError(lineno, f"unrecognized directive {body[pos:].strip()!r}")
            parts = [p.strip() for p in m.group(2).split(",")]
            try:
                parts = [check_position_id(p) for p in parts]
            except InvalidPositionId as exc:
                raise ParseError(lineno, str(exc)) from None
            if m.group(1) == "arg":
                if len(parts) != 1:
                    raise ParseError(lineno, "arg/1 takes one name")
                args.append(parts[0])
            else:
                if len(parts) != 2:
                    raise ParseError(lineno, "att/2 takes two names")
                attacks.append((parts[0], parts[1], lineno))
            pos = m.end()
    declared = set(args)
    for a, b, lineno in attacks:
        for name in (a, b):
            if name not in declared:
                raise UndeclaredArgument(lineno, f"undeclared argument {name!r}")
    return ArgumentationFramework.build(args, [(a, b) for a, b, _ in attacks])


def render_apx(af: ArgumentationFramework) -> str:
    lines = [f"arg({a})." for a in af.arguments]
    lines += [f"att({a},{b})." for a, b in af.attacks]
    return "".join(line + "\n" for line in lines)


# -- JSON ---------------------------------------------------------------------


def _len_out(n: Length) -> int | str:
    return "inf" if n == INF else int(n)


def _len_in(v: object) -> Length:
    if v == "inf":
        return INF
    if isinstance(v, int) and not isinstance(v, bool) and v >= 0:
        return v
    raise ValueError(f"bad length {v!r}")


def _dump(obj: object) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False) + "\n"


def _edge_json(x: str, y: str, ann: EdgeAnnotation | None) -> dict:
    out: dict = {"src": x, "dst": y}
    if ann is not None:
        out["type"] = ann.edge_type.value
        if ann.length is not None:
            out["len"] = _len_out(ann.length)
    return out


def _node_json(x: str, lab: NodeLabel | None, af: bool) -> dict:
    if lab is None:
        return {"id": x}
    if af:
        return {"id": x, "label": FROM_VALUE[lab.value].value, "len": _len_out(lab.length)}
    return {"id": x, "value": lab.value.value, "len": _len_out(lab.length)}


def export_json(s: SolvedGame | ProvenanceSubgraph | GameGraph, af: bool = False) -> str:
    """Serialize compactly; with ``af=True`` nodes carry argument labels."""
    if isinstance(s, GameGraph):
        return _dump(
            {
                "nodes": [{"id": x} for x in s.positions],
                "edges": [{"src": x, "dst": y} for x, y in s.moves],
            }
        )
    if isinstance(s, SolvedGame):
        nodes, labels, edges = s.graph.positions, s.node_labels, s.edge_annotations
        doc: dict = {}
    else:
        nodes, labels, edges = s.nodes, s.labels, s.edges
        doc = {"root": s.root}
    doc["nodes"] = [_node_json(x, labels.get(x), af) for x in nodes]
    doc["edges"] = [_edge_json(x, y, edges[(x, y)]) for x, y in sorted(edges)]
    return _dump(doc)


def parse_solved_json(text: str) -> SolvedGame:
    """Read a labeled game as written by :func:`export_json`.

    Labels are taken as given, not recomputed.  Edges without a type stay
    unannotated so that :func:`validate_solution` reports them.
    """
    try:
        doc = json.loads(text)
        nodes = {}
        for item in doc["nodes"]:
            nodes[item["id"]] = NodeLabel(Value(item["value"]), _len_in(item["len"]))
        edges = {}
        for item in doc["edges"]:
            m = (item["src"], item["dst"])
            if "type" in item:
                n = _len_in(item["len"]) if "len" in item else None
                edges[m] = EdgeAnnotation(EdgeType(item["type"]), n)
        g = build_graph(nodes, [(e["src"], e["dst"]) for e in doc["edges"]])
    except (KeyError, TypeError, ValueError, GraphError) as exc:
        raise ParseError(0, f"malformed solved-game JSON: {exc}") from None
    return SolvedGame(g, nodes, edges)


def parse_graph_json(text: str) -> GameGraph:
    try:
        doc = json.loads(text)
        return build_graph(
            [n["id"] for n in doc["nodes"]], [(e["src"], e["dst"]) for e in doc["edges"]]
        )
    except (KeyError, TypeError, ValueError, GraphError) as exc:
        raise ParseError(0, f"malformed graph JSON: {exc}") from None


def export_af_json(
    af: ArgumentationFramework, labeling: Mapping[str, tuple[AfLabel, Length]]
) -> str:
    return _dump(
        {
            "arguments": [
                {"id": a, "label": labeling[a][0].value, "len": _len_out(labeling[a][1])}
                for a in af.arguments
            ],
            "attacks": [{"src": a, "dst": b} for a, b in af.attacks],
        }
    )


# -- DOT ----------------------------------------------------------------------

NODE_FILL = {Value.WON: "green", Value.LOST: "red", Value.DRAWN: "yellow"}
AF_FILL = {AfLabel.ACCEPTED: "blue", AfLabel.DEFEATED: "orange", AfLabel.UNDECIDED: "yellow"}
EDGE_STYLE = {
    EdgeType.WIN_PRIMARY: ("green", "solid"),
    EdgeType.WIN_SECONDARY: ("green", "dashed"),
    EdgeType.DELAYING: ("red", "solid"),
    EdgeType.DRAWING: ("yellow", "solid"),
    EdgeType.BLUNDER_WW: ("brown", "dashed"),
    EdgeType.BLUNDER_WD: ("brown", "dashed"),
    EdgeType.BLUNDER_DW: ("brown", "dashed"),
}
UNTYPED_STYLE = ("gray", "solid")


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _len_text(n: Length) -> str:
    return "inf" if n == INF else str(n)


def _dot(
    nodes: tuple[str, ...],
    labels: Mapping[str, NodeLabel],
    edges: Mapping[tuple[str, str], EdgeAnnotation | None],
    af: bool,
) -> str:
    if not nodes:
        return "digraph {}\n"
    out = ["digraph {", "  node [style=filled];"]
    for x in nodes:
        lab = labels.get(x)
        if lab is None:
            out.append(f"  {_q(x)} [label={_q(x)}, fillcolor=gray];")
            continue
        fill = AF_FILL[FROM_VALUE[lab.value]] if af else NODE_FILL[lab.value]
        text = f"{x} : {_len_text(lab.length)}"
        out.append(f"  {_q(x)} [label={_q(text)}, fillcolor={fill}];")
    for (x, y) in sorted(edges):
        ann = edges[(x, y)]
        color, style = UNTYPED_STYLE if ann is None else EDGE_STYLE[ann.edge_type]
        attrs = f"color={color}, style={style}"
        if ann is not None and ann.length is not None:
            attrs += f", label={_q(_len_text(ann.length))}"
        out.append(f"  {_q(x)} -> {_q(y)} [{attrs}];")
    out.append("}")
    return "\n".join(out) + "\n"


def export_dot(s: SolvedGame | ProvenanceSubgraph | GameGraph, af: bool = False) -> str:
    """Render as a Graphviz digraph.

    Node fills are green/red/yellow for won/lost/drawn, or with ``af=True``
    blue/orange/yellow for accepted/defeated/undecided.  Nodes read
    ``id : len``.  Untyped nodes and edges are gray.
    """
    if isinstance(s, GameGraph):
        return _dot(s.positions, {}, {m: None for m in s.moves}, af)
    if isinstance(s, SolvedGame):
        return _dot(s.graph.positions, s.node_labels, s.edge_annotations, af)
    return _dot(s.nodes, s.labels, s.edges, af)


def export_af_dot(af: ArgumentationFramework, labeling: Mapping[str, tuple[AfLabel, Length]]) -> str:
    """Framework in attack orientation with accepted/defeated/undecided fills."""
    to_value = {v: k for k, v in FROM_VALUE.items()}
    labels = {a: NodeLabel(to_value[lab], n) for a, (lab, n) in labeling.items()}
    return _dot(af.arguments, labels, {m: None for m in af.attacks}, af=True)
