"""Potential, actual and primary provenance of a position.

Each kind is available through two independent routes: a closure that
follows only permitted edge types, and :func:`match_rpq`, which evaluates a
regular path query on the product of the typed graph with an automaton.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum

from .graph import GameGraph, Move, induced_subgraph, reachable_closure
from .rpq import Automaton, Rpq, compile_rpq, parse_rpq
from .solver import EdgeAnnotation, EdgeType, NodeLabel, SolvedGame, Value


class Kind(Enum):
    POTENTIAL = "potential"
    ACTUAL = "actual"
    PRIMARY = "primary"


@dataclass(frozen=True)
class ProvenanceSubgraph:
    """A subgraph rooted at ``root``.

    ``edges`` maps each move to its annotation, or ``None`` for the untyped
    edges of potential provenance.  ``labels`` is empty for untyped
    subgraphs.
    """

    root: str
    nodes: tuple[str, ...]
    edges: dict[Move, EdgeAnnotation | None]
    labels: dict[str, NodeLabel] = field(default_factory=dict)

    @property
    def moves(self) -> tuple[Move, ...]:
        return tuple(self.edges)

    def issubgraph(self, other: ProvenanceSubgraph) -> bool:
        return set(self.nodes) <= set(other.nodes) and set(self.edges) <= set(other.edges)

    def reversed(self) -> ProvenanceSubgraph:
        edges = {(y, x): a for (x, y), a in self.edges.items()}
        return ProvenanceSubgraph(self.root, self.nodes, dict(sorted(edges.items())), self.labels)


ACTUAL_TYPES = frozenset(
    {EdgeType.WIN_PRIMARY, EdgeType.WIN_SECONDARY, EdgeType.DELAYING, EdgeType.DRAWING}
)
PRIMARY_TYPES = ACTUAL_TYPES - {EdgeType.WIN_SECONDARY}

# Edge labels seen by path queries; blunders carry none.
RPQ_LABEL = {
    EdgeType.WIN_PRIMARY: "Wpr",
    EdgeType.WIN_SECONDARY: "Wsc",
    EdgeType.DELAYING: "L",
    EdgeType.DRAWING: "D",
}


def _subgraph(s: SolvedGame, root: str, moves: Iterable[Move]) -> ProvenanceSubgraph:
    edges = {m: s.edge_annotations[m] for m in sorted(set(moves))}
    nodes = {root} | {v for m in edges for v in m}
    return ProvenanceSubgraph(
        root, tuple(sorted(nodes)), edges, {x: s.node_labels[x] for x in sorted(nodes)}
    )


def potential_provenance(g: GameGraph | SolvedGame, x: str) -> ProvenanceSubgraph:
    if isinstance(g, SolvedGame):
        g = g.graph
    sub = induced_subgraph(g, reachable_closure(g, x))
    return ProvenanceSubgraph(x, sub.positions, {m: None for m in sub.moves})


def _typed_closure(s: SolvedGame, x: str, allowed: frozenset[EdgeType]) -> ProvenanceSubgraph:
    s.graph.require(x)
    seen = {x}
    moves = []
    queue = deque([x])
    while queue:
        u = queue.popleft()
        for v in s.graph.successors(u):
            if s.edge_annotations[(u, v)].edge_type not in allowed:
                continue
            moves.append((u, v))
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return _subgraph(s, x, moves)


def actual_provenance(s: SolvedGame, x: str) -> ProvenanceSubgraph:
    return _typed_closure(s, x, ACTUAL_TYPES)


def primary_provenance(s: SolvedGame, x: str) -> ProvenanceSubgraph:
    return _typed_closure(s, x, PRIMARY_TYPES)


def provenance(s: SolvedGame, x: str, kind: Kind | str) -> ProvenanceSubgraph:
    kind = Kind(kind)
    if kind is Kind.POTENTIAL:
        return potential_provenance(s, x)
    if kind is Kind.ACTUAL:
        return actual_provenance(s, x)
    return primary_provenance(s, x)


_PATTERNS = {
    (Value.WON, Kind.ACTUAL): "W.(L.W)*",
    (Value.LOST, Kind.ACTUAL): "(L.W)*",
    (Value.DRAWN, Kind.ACTUAL): "D+",
    (Value.WON, Kind.PRIMARY): "Wpr.(L.Wpr)*",
    (Value.LOST, Kind.PRIMARY): "(L.Wpr)*",
    (Value.DRAWN, Kind.PRIMARY): "D+",
}


def standard_pattern(v: Value, kind: Kind | str) -> Rpq:
    """The path query whose matches form the actual or primary provenance
    of a position with value ``v``."""
    kind = Kind(kind)
    if kind is Kind.POTENTIAL:
        raise ValueError("potential provenance has no path pattern")
    return parse_rpq(_PATTERNS[(v, kind)])


def match_rpq(s: SolvedGame, x: str, r: Rpq | str | Automaton) -> ProvenanceSubgraph:
    """Minimal subgraph rooted at ``x`` holding every walk that matches ``r``.

    Walks may revisit positions.  A move is kept iff it lies on some walk
    from ``x`` whose label word is accepted; this is computed as the
    forward-reachable and backward-co-reachable part of the product of the
    typed graph with the automaton.
    """
    s.graph.require(x)
    nfa = r if isinstance(r, Automaton) else compile_rpq(r)
    g = s.graph

    def out(u: str, q: int):
        for v in g.successors(u):
            label = RPQ_LABEL.get(s.edge_annotations[(u, v)].edge_type)
            if label is None:
                continue
            for q2 in nfa.delta[q].get(label, ()):
                yield v, q2

    forward = {(x, q) for q in nfa.start}
    queue = deque(forward)
    arcs: list[tuple[tuple[str, int], tuple[str, int]]] = []
    while queue:
        node = queue.popleft()
        for nxt in out(*node):
            arcs.append((node, nxt))
            if nxt not in forward:
                forward.add(nxt)
                queue.append(nxt)

    back: dict[tuple[str, int], list[tuple[str, int]]] = {}
    for a, b in arcs:
        back.setdefault(b, []).append(a)
    useful = {n for n in forward if n[1] in nfa.accepting}
    queue = deque(useful)
    while queue:
        for prev in back.get(queue.popleft(), ()):
            if prev not in useful:
                useful.add(prev)
                queue.append(prev)

    kept = {(a[0], b[0]) for a, b in arcs if b in useful}
    return _subgraph(s, x, kept)
