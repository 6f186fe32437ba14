"""Backward-induction solver for win-move games.

Two routes produce the same :class:`SolvedGame`:

* :func:`solve` runs synchronized sweeps of the red rule (a position is lost
  when all its followers are won) and the green rule (a position is won when
  some follower is lost), recording a :class:`StepTrace`.  Under sweep
  semantics the step at which a position is labeled equals its length.
* :func:`solve_fast` is the usual counter/worklist retrograde analysis and
  runs in O(|V| + |E|) after sorting.

Edge types are derived afterwards from the final node labels.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum

from .graph import GameGraph, GraphError, Move

INF = math.inf
Length = int | float  # a natural number, or math.inf


class Value(Enum):
    WON = "won"
    LOST = "lost"
    DRAWN = "drawn"


class EdgeType(Enum):
    WIN_PRIMARY = "win_primary"
    WIN_SECONDARY = "win_secondary"
    DELAYING = "delaying"
    DRAWING = "drawing"
    BLUNDER_WW = "blunder_ww"
    BLUNDER_WD = "blunder_wd"
    BLUNDER_DW = "blunder_dw"

    @property
    def is_blunder(self) -> bool:
        return self in _BLUNDERS

    @property
    def has_length(self) -> bool:
        return self not in _BLUNDERS


_BLUNDERS = frozenset({EdgeType.BLUNDER_WW, EdgeType.BLUNDER_WD, EdgeType.BLUNDER_DW})

# Numbered aliases for the three blunder kinds.
BLUNDER1 = EdgeType.BLUNDER_WW
BLUNDER2 = EdgeType.BLUNDER_WD
BLUNDER3 = EdgeType.BLUNDER_DW


class Rule(Enum):
    RED = "RR"
    GREEN = "GR"
    DRAW = "DRAW"


class UnknownMove(GraphError, KeyError):
    def __str__(self) -> str:
        return f"unknown move: {self.args[0]!r}"


@dataclass(frozen=True)
class NodeLabel:
    value: Value
    length: Length


@dataclass(frozen=True)
class EdgeAnnotation:
    edge_type: EdgeType
    length: Length | None = None


@dataclass(frozen=True)
class SolvedGame:
    graph: GameGraph
    node_labels: Mapping[str, NodeLabel]
    edge_annotations: Mapping[Move, EdgeAnnotation]

    def value(self, x: str) -> Value:
        self.graph.require(x)
        return self.node_labels[x].value

    def length(self, x: str) -> Length:
        self.graph.require(x)
        return self.node_labels[x].length


@dataclass(frozen=True)
class Step:
    index: Length  # inf for the draw closure
    rule: Rule
    newly_labeled: tuple[str, ...]
    # Moves marked primary at the moment a green-rule step fires.
    primary_moves: tuple[Move, ...] = ()


@dataclass(frozen=True)
class StepTrace:
    steps: tuple[Step, ...] = field(default_factory=tuple)

    def step_of(self) -> dict[str, Length]:
        return {x: s.index for s in self.steps for x in s.newly_labeled}

    def lines(self) -> list[str]:
        out = []
        for s in self.steps:
            idx = "inf" if s.index == INF else str(s.index)
            ids = " ".join(s.newly_labeled)
            out.append(f"step {idx} {s.rule.value}:" + (f" {ids}" if ids else ""))
        return out


def edge_annotation(src: NodeLabel, dst: NodeLabel) -> EdgeAnnotation:
    """Type a move from the labels of its endpoints.

    Raises ``ValueError`` for ghost edges (lost->lost, lost->drawn,
    drawn->lost), which cannot occur in a correct solution.
    """
    match src.value, dst.value:
        case Value.WON, Value.LOST:
            n = 1 + dst.length
            kind = EdgeType.WIN_PRIMARY if n == src.length else EdgeType.WIN_SECONDARY
            return EdgeAnnotation(kind, n)
        case Value.LOST, Value.WON:
            return EdgeAnnotation(EdgeType.DELAYING, 1 + dst.length)
        case Value.DRAWN, Value.DRAWN:
            return EdgeAnnotation(EdgeType.DRAWING, INF)
        case Value.WON, Value.WON:
            return EdgeAnnotation(BLUNDER1)
        case Value.WON, Value.DRAWN:
            return EdgeAnnotation(BLUNDER2)
        case Value.DRAWN, Value.WON:
            return EdgeAnnotation(BLUNDER3)
    raise ValueError(f"ghost edge {src.value.value} -> {dst.value.value}")


def _finalize(g: GameGraph, labels: dict[str, NodeLabel]) -> SolvedGame:
    for x in g.positions:
        labels.setdefault(x, NodeLabel(Value.DRAWN, INF))
    nodes = {x: labels[x] for x in g.positions}
    edges = {(x, y): edge_annotation(nodes[x], nodes[y]) for x, y in g.moves}
    return SolvedGame(g, nodes, edges)


def solve(g: GameGraph) -> tuple[SolvedGame, StepTrace]:
    labels: dict[str, NodeLabel] = {}
    steps: list[Step] = []
    open_ = set(g.positions)
    index = 0
    while True:
        new: dict[str, NodeLabel] = {}
        marks: list[Move] = []
        if index % 2 == 0:
            rule = Rule.RED
            for x in sorted(open_):
                fs = g.successors(x)
                if all(y in labels and labels[y].value is Value.WON for y in fs):
                    delay = max((labels[y].length for y in fs), default=-1)
                    new[x] = NodeLabel(Value.LOST, 1 + delay)
        else:
            rule = Rule.GREEN
            for x in sorted(open_):
                lost = [
                    y
                    for y in g.successors(x)
                    if y in labels and labels[y].value is Value.LOST
                ]
                if lost:
                    new[x] = NodeLabel(Value.WON, 1 + min(labels[y].length for y in lost))
                    marks.extend((x, y) for y in lost)
        if not new and index > 0:
            break
        labels.update(new)
        open_.difference_update(new)
        steps.append(Step(index, rule, tuple(sorted(new)), tuple(sorted(marks))))
        index += 1

    steps.append(Step(INF, Rule.DRAW, tuple(sorted(open_))))
    solved = _finalize(g, labels)
    return solved, StepTrace(tuple(steps))


def solve_fast(g: GameGraph) -> SolvedGame:
    labels: dict[str, NodeLabel] = {}
    pending = {x: len(g.successors(x)) for x in g.positions}
    queue = deque()
    for x in g.sinks():
        labels[x] = NodeLabel(Value.LOST, 0)
        queue.append(x)
    # FIFO order visits labels in nondecreasing length, so the first lost
    # follower seen is the shortest win and the last won follower the
    # longest delay.
    while queue:
        y = queue.popleft()
        ly = labels[y]
        for x in g.predecessors(y):
            if x in labels:
                continue
            if ly.value is Value.LOST:
                labels[x] = NodeLabel(Value.WON, 1 + ly.length)
                queue.append(x)
            else:
                pending[x] -= 1
                if pending[x] == 0:
                    labels[x] = NodeLabel(Value.LOST, 1 + ly.length)
                    queue.append(x)
    return _finalize(g, labels)


def classify_edge(s: SolvedGame, x: str, y: str) -> EdgeAnnotation:
    try:
        return s.edge_annotations[(x, y)]
    except KeyError:
        raise UnknownMove((x, y)) from None


@dataclass(frozen=True)
class Violation:
    kind: str
    where: str | Move
    detail: str = ""

    def __str__(self) -> str:
        where = self.where if isinstance(self.where, str) else "->".join(self.where)
        return f"{self.kind} at {where}" + (f": {self.detail}" if self.detail else "")


def validate_solution(s: SolvedGame) -> list[Violation]:
    """Check a (possibly hand-built) labeling against the game semantics.

    Node labels are recomputed locally from the followers' labels, so the
    check does not depend on either solver.
    """
    g = s.graph
    out: list[Violation] = []
    nodes = s.node_labels
    missing = [x for x in g.positions if x not in nodes]
    out += [Violation("MissingLabel", x) for x in missing]
    if missing:
        return out

    for x, y in g.moves:
        a, b = nodes[x].value, nodes[y].value
        if a is Value.LOST and b is not Value.WON or a is Value.DRAWN and b is Value.LOST:
            out.append(Violation("GhostEdge", (x, y), f"{a.value} -> {b.value}"))

    for x in g.positions:
        lab = nodes[x]
        fl = [nodes[y] for y in g.successors(x)]
        if lab.value is Value.DRAWN:
            if lab.length != INF:
                out.append(Violation("ParityViolation", x, "drawn with finite length"))
        elif lab.length == INF or not isinstance(lab.length, int) or lab.length < 0:
            out.append(Violation("ParityViolation", x, f"length {lab.length}"))
        elif lab.length % 2 != (1 if lab.value is Value.WON else 0):
            out.append(Violation("ParityViolation", x, f"{lab.value.value} with length {lab.length}"))

        lost = [f.length for f in fl if f.value is Value.LOST]
        if lab.value is Value.WON:
            if not lost:
                out.append(Violation("LabelMismatch", x, "won without a lost follower"))
            elif lab.length != 1 + min(lost):
                out.append(Violation("LabelMismatch", x, "not the shortest win"))
        elif lab.value is Value.LOST:
            if any(f.value is not Value.WON for f in fl):
                out.append(Violation("LabelMismatch", x, "lost with a non-won follower"))
            elif lab.length != 1 + max((f.length for f in fl), default=-1):
                out.append(Violation("LabelMismatch", x, "not the longest delay"))
        else:
            if lost:
                out.append(Violation("LabelMismatch", x, "drawn with a lost follower"))
            if not any(f.value is Value.DRAWN for f in fl):
                out.append(Violation("LabelMismatch", x, "drawn without a drawn follower"))

    for (x, y), ann in s.edge_annotations.items():
        try:
            expected = edge_annotation(nodes[x], nodes[y])
        except ValueError:
            continue  # already reported as a ghost edge
        if ann != expected:
            out.append(Violation("EdgeTypeMismatch", (x, y), f"{ann.edge_type.value}"))
    for m in g.moves:
        if m not in s.edge_annotations:
            out.append(Violation("MissingAnnotation", m))

    for x in g.positions:
        types = {s.edge_annotations.get((x, y), None) for y in g.successors(x)}
        kinds = {a.edge_type for a in types if a is not None}
        if nodes[x].value is Value.WON and EdgeType.WIN_PRIMARY not in kinds:
            out.append(Violation("NoPrimaryWin", x))
        if nodes[x].value is Value.DRAWN and EdgeType.DRAWING not in kinds:
            out.append(Violation("NoDrawingMove", x))
    return out


def primary_mark_mismatches(s: SolvedGame, trace: StepTrace) -> set[Move]:
    """Moves where the in-flight primary marks of ``trace`` disagree with the
    declarative edge typing of ``s`` (symmetric difference)."""
    marked = {m for step in trace.steps for m in step.primary_moves}
    typed = {
        m for m, a in s.edge_annotations.items() if a.edge_type is EdgeType.WIN_PRIMARY
    }
    return marked ^ typed
