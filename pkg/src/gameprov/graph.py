"""Immutable game graphs: positions, moves, followers and reachability."""

from __future__ import annotations

import re
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field

PositionId = str
Move = tuple[str, str]

_TOKEN = re.compile(r"[^\s#,()]+")


class GraphError(ValueError):
    """Base class for graph construction and lookup errors."""


class InvalidPositionId(GraphError):
    pass


class UnknownPosition(GraphError, KeyError):
    def __str__(self) -> str:
        return f"unknown position: {self.args[0]!r}"


def check_position_id(token: object) -> str:
    """Return ``token`` if it is a legal position id, else raise.

    Ids are non-empty strings without whitespace, ``#``, ``,`` or
    parentheses, so that edge lists and APX files stay unambiguous.
    """
    if not isinstance(token, str) or not _TOKEN.fullmatch(token):
        raise InvalidPositionId(f"invalid position id: {token!r}")
    return token


@dataclass(frozen=True)
class GameGraph:
    """A finite directed graph; positions and moves are kept sorted.

    Build instances with :func:`build_graph` rather than directly.
    """

    positions: tuple[str, ...] = ()
    moves: tuple[Move, ...] = ()
    _succ: dict[str, tuple[str, ...]] = field(
        default_factory=dict, repr=False, compare=False
    )
    _pred: dict[str, tuple[str, ...]] = field(
        default_factory=dict, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        succ: dict[str, list[str]] = {p: [] for p in self.positions}
        pred: dict[str, list[str]] = {p: [] for p in self.positions}
        for x, y in self.moves:
            succ[x].append(y)
            pred[y].append(x)
        self._succ.update({p: tuple(v) for p, v in succ.items()})
        self._pred.update({p: tuple(v) for p, v in pred.items()})

    def __contains__(self, x: object) -> bool:
        return x in self._succ

    def __len__(self) -> int:
        return len(self.positions)

    def require(self, x: str) -> None:
        if x not in self._succ:
            raise UnknownPosition(x)

    def successors(self, x: str) -> tuple[str, ...]:
        self.require(x)
        return self._succ[x]

    def predecessors(self, x: str) -> tuple[str, ...]:
        self.require(x)
        return self._pred[x]

    def has_move(self, x: str, y: str) -> bool:
        return x in self._succ and y in self._succ[x]

    def sinks(self) -> tuple[str, ...]:
        return tuple(p for p in self.positions if not self._succ[p])

    def reversed(self) -> GameGraph:
        return build_graph(self.positions, [(y, x) for x, y in self.moves])


def build_graph(
    positions: Iterable[str], moves: Iterable[tuple[str, str]]
) -> GameGraph:
    """Validate and canonicalize a graph.

    Duplicates are dropped and endpoints of moves are added as positions.
    """
    nodes = {check_position_id(p) for p in positions}
    edges = set()
    for x, y in moves:
        edges.add((check_position_id(x), check_position_id(y)))
        nodes.update((x, y))
    return GameGraph(tuple(sorted(nodes)), tuple(sorted(edges)))


def followers(g: GameGraph, x: str) -> tuple[str, ...]:
    return g.successors(x)


def reachable_closure(g: GameGraph, x: str) -> tuple[str, ...]:
    """``x`` together with every position reachable from it, sorted."""
    g.require(x)
    seen = {x}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        for v in g.successors(u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return tuple(sorted(seen))


def induced_subgraph(g: GameGraph, nodes: Iterable[str]) -> GameGraph:
    keep = set(nodes)
    for x in keep:
        g.require(x)
    return GameGraph(
        tuple(sorted(keep)),
        tuple(m for m in g.moves if m[0] in keep and m[1] in keep),
    )
