"""Grounded semantics for abstract argumentation frameworks via games.

An attack ``(y, x)`` becomes the game move ``x -> y``: an argument is
defeated exactly when its position is won, accepted when lost, and
undecided when drawn.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum

from .graph import GameGraph, Move, build_graph
from .provenance import Kind, ProvenanceSubgraph, provenance
from .solver import Length, SolvedGame, Value, solve_fast


class AfLabel(Enum):
    ACCEPTED = "accepted"
    DEFEATED = "defeated"
    UNDECIDED = "undecided"


FROM_VALUE = {
    Value.WON: AfLabel.DEFEATED,
    Value.LOST: AfLabel.ACCEPTED,
    Value.DRAWN: AfLabel.UNDECIDED,
}


@dataclass(frozen=True)
class ArgumentationFramework:
    arguments: tuple[str, ...]
    attacks: tuple[Move, ...]

    @classmethod
    def build(cls, arguments: Iterable[str], attacks: Iterable[Move]) -> ArgumentationFramework:
        g = build_graph(arguments, attacks)
        return cls(g.positions, g.moves)

    @classmethod
    def from_game(cls, g: GameGraph) -> ArgumentationFramework:
        """The framework whose game is ``g``."""
        return cls.build(g.positions, [(y, x) for x, y in g.moves])


def af_to_game(af: ArgumentationFramework) -> GameGraph:
    return build_graph(af.arguments, [(x, y) for y, x in af.attacks])


def solve_af(af: ArgumentationFramework) -> SolvedGame:
    return solve_fast(af_to_game(af))


def grounded_labeling(af: ArgumentationFramework) -> dict[str, tuple[AfLabel, Length]]:
    s = solve_af(af)
    return {x: (FROM_VALUE[lab.value], lab.length) for x, lab in s.node_labels.items()}


def grounded_extension(af: ArgumentationFramework) -> tuple[str, ...]:
    return tuple(x for x, (lab, _) in grounded_labeling(af).items() if lab is AfLabel.ACCEPTED)


def argument_provenance(
    af: ArgumentationFramework, x: str, kind: Kind | str
) -> ProvenanceSubgraph:
    """Explain the status of ``x``; edges are returned as attacks."""
    return provenance(solve_af(af), x, kind).reversed()
