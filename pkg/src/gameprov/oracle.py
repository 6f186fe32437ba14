"""Brute-force reference semantics for small games.

Nothing here calls the solver.  Values and lengths come from enumerating
positional strategies and playing them out; grounded labelings come from
iterating the characteristic function of the framework directly.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Mapping
from dataclasses import dataclass

from .graph import GameGraph, reachable_closure
from .solver import INF, Length, SolvedGame, Value

Strategy = dict[str, str]


class GraphTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Mismatch:
    position: str
    expected: tuple[Value, Length] | None
    actual: tuple[Value, Length] | None


class _Budget:
    def __init__(self, limit: int):
        self.left = limit

    def spend(self, n: int = 1) -> None:
        self.left -= n
        if self.left < 0:
            raise GraphTooLarge("strategy enumeration exceeds the play budget")


def _strategies(g: GameGraph, domain: list[str]) -> Iterator[Strategy]:
    for choice in itertools.product(*(g.successors(p) for p in domain)):
        yield dict(zip(domain, choice))


def _plays(
    g: GameGraph, x: str, fixed: Strategy, fixed_parity: int, budget: _Budget
) -> Iterator[tuple[int | None, int]]:
    """All plays from ``x`` where the player at ``fixed_parity`` follows
    ``fixed`` and the other player moves freely.

    Yields ``(loser_parity, length)``; ``loser_parity`` is None for a play
    cut off by a repeated (position, player-to-move) state.  Since such a
    play never revisits a state, every free-player branch is realized by
    some positional strategy.
    """
    stack = [(x, 0, 0, frozenset())]
    while stack:
        pos, parity, n, seen = stack.pop()
        if (pos, parity) in seen:
            budget.spend()
            yield None, n
            continue
        succ = g.successors(pos)
        if not succ:
            budget.spend()
            yield parity, n
            continue
        seen = seen | {(pos, parity)}
        nxt = (fixed[pos],) if parity == fixed_parity else succ
        for y in nxt:
            stack.append((y, 1 - parity, n + 1, seen))


def _play(g: GameGraph, x: str, sigma: Strategy, tau: Strategy) -> tuple[int | None, int]:
    seen = set()
    pos, parity, n = x, 0, 0
    while (pos, parity) not in seen:
        if not g.successors(pos):
            return parity, n
        seen.add((pos, parity))
        pos = (sigma if parity == 0 else tau)[pos]
        parity, n = 1 - parity, n + 1
    return None, n


def _solve_position(g: GameGraph, x: str, budget: _Budget) -> tuple[Value, Length]:
    domain = [p for p in reachable_closure(g, x) if g.successors(p)]

    # Won: some sigma wins every play; length is the fastest such guarantee.
    best = None
    for sigma in _strategies(g, domain):
        worst = 0
        for loser, n in _plays(g, x, sigma, 0, budget):
            if loser != 1:
                break
            worst = max(worst, n)
        else:
            best = worst if best is None else min(best, worst)
    if best is not None:
        return Value.WON, best

    # Lost: every sigma admits a play the opponent wins.
    for sigma in _strategies(g, domain):
        if not any(loser == 0 for loser, _ in _plays(g, x, sigma, 0, budget)):
            return Value.DRAWN, INF

    forcing = []
    for tau in _strategies(g, domain):
        if all(loser == 0 for loser, _ in _plays(g, x, tau, 1, budget)):
            forcing.append(tau)
    if not forcing:
        raise RuntimeError(f"no positional winning strategy against {x!r}")
    delay = 0
    for sigma in _strategies(g, domain):
        budget.spend(len(forcing))
        delay = max(delay, min(_play(g, x, sigma, tau)[1] for tau in forcing))
    return Value.LOST, delay


def oracle_solve(
    g: GameGraph, max_nodes: int = 8, max_plays: int = 10**7
) -> dict[str, tuple[Value, Length]]:
    """Value and length of every position by strategy enumeration.

    A player forces a win if some positional strategy wins against every
    reply.  Won lengths minimize, over winning strategies, the longest play;
    lost lengths maximize, over the loser's strategies, the shortest play
    against the opponent's winning strategies.  A play that repeats a
    (position, player-to-move) state is a draw.
    """
    if len(g) > max_nodes:
        raise GraphTooLarge(f"{len(g)} positions exceed the limit of {max_nodes}")
    budget = _Budget(max_plays)
    return {x: _solve_position(g, x, budget) for x in g.positions}


def compare(
    solution: SolvedGame, reference: Mapping[str, tuple[Value, Length]]
) -> list[Mismatch]:
    out = []
    for x in sorted(set(solution.node_labels) | set(reference)):
        lab = solution.node_labels.get(x)
        got = (lab.value, lab.length) if lab is not None else None
        want = reference.get(x)
        if got != want:
            out.append(Mismatch(x, want, got))
    return out


def grounded_by_characteristic(arguments, attacks) -> dict[str, str]:
    """Grounded labeling by the classical iteration.

    An argument is accepted once all its attackers are defeated and
    defeated once some attacker is accepted; the rest stay undecided.
    Returns ``"accepted"``, ``"defeated"`` or ``"undecided"`` per argument.
    """
    attackers: dict[str, set[str]] = {a: set() for a in arguments}
    for a, b in attacks:
        attackers[b].add(a)
    accepted: set[str] = set()
    defeated: set[str] = set()
    while True:
        acc = {a for a, att in attackers.items() if att <= defeated}
        dfd = {a for a, att in attackers.items() if att & accepted}
        if acc == accepted and dfd == defeated:
            break
        accepted, defeated = acc, dfd
    return {
        a: "accepted" if a in accepted else "defeated" if a in defeated else "undecided"
        for a in attackers
    }
