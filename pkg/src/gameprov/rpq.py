"""Regular path queries over provenance edge labels.

Surface syntax: the letters ``Wpr``, ``Wsc``, ``W``, ``L`` and ``D``,
``.`` for concatenation, ``|`` for alternation, postfix ``*`` and ``+``,
and parentheses.  Whitespace is ignored.  ``W`` is shorthand for
``(Wpr|Wsc)``.  Precedence, tightest first: postfix, ``.``, ``|``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

ALPHABET = ("Wpr", "Wsc", "L", "D")


class MalformedExpression(ValueError):
    pass


@dataclass(frozen=True)
class Sym:
    label: str  # one of ALPHABET, or "W"


@dataclass(frozen=True)
class Concat:
    left: Rpq
    right: Rpq


@dataclass(frozen=True)
class Alt:
    left: Rpq
    right: Rpq


@dataclass(frozen=True)
class Star:
    inner: Rpq


@dataclass(frozen=True)
class Plus:
    inner: Rpq


Rpq = Sym | Concat | Alt | Star | Plus

_LEX = re.compile(r"\s*(?:(Wpr|Wsc|W|L|D)|([.|*+()]))")


def _tokenize(text: str) -> list[str]:
    out, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _LEX.match(text, pos)
        if not m:
            raise MalformedExpression(f"unexpected input at offset {pos}: {text[pos:]!r}")
        out.append(m.group(1) or m.group(2))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens: list[str]):
        self.toks = tokens
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise MalformedExpression("unexpected end of expression")
        self.i += 1
        return tok

    def alt(self) -> Rpq:
        node = self.concat()
        while self.peek() == "|":
            self.take()
            node = Alt(node, self.concat())
        return node

    def concat(self) -> Rpq:
        node = self.postfix()
        while self.peek() == ".":
            self.take()
            node = Concat(node, self.postfix())
        return node

    def postfix(self) -> Rpq:
        node = self.atom()
        while self.peek() in ("*", "+"):
            node = Star(node) if self.take() == "*" else Plus(node)
        return node

    def atom(self) -> Rpq:
        tok = self.take()
        if tok == "(":
            node = self.alt()
            if self.take() != ")":
                raise MalformedExpression("expected ')'")
            return node
        if tok in ALPHABET or tok == "W":
            return Sym(tok)
        raise MalformedExpression(f"unexpected token {tok!r}")


def parse_rpq(text: str) -> Rpq:
    tokens = _tokenize(text)
    if not tokens:
        raise MalformedExpression("empty expression")
    p = _Parser(tokens)
    node = p.alt()
    if p.peek() is not None:
        raise MalformedExpression(f"trailing input at token {p.peek()!r}")
    return node


def format_rpq(r: Rpq) -> str:
    """Render an AST back to surface syntax, parenthesizing conservatively."""

    def go(n: Rpq, ctx: int) -> str:
        # ctx: 0 = alt, 1 = concat, 2 = postfix operand
        match n:
            case Sym(label):
                return label
            case Alt(a, b):
                s = f"{go(a, 0)}|{go(b, 0)}"
                return s if ctx == 0 else f"({s})"
            case Concat(a, b):
                s = f"{go(a, 1)}.{go(b, 1)}"
                return s if ctx <= 1 else f"({s})"
            case Star(a):
                return f"{go(a, 2)}*"
            case Plus(a):
                return f"{go(a, 2)}+"
        raise MalformedExpression(f"not an expression: {n!r}")

    return go(r, 0)


@dataclass(frozen=True)
class Automaton:
    """An epsilon-free NFA over :data:`ALPHABET`.

    ``delta[q]`` maps a letter to the set of successor states.
    """

    n_states: int
    start: frozenset[int]
    accepting: frozenset[int]
    delta: tuple[dict[str, frozenset[int]], ...]

    def accepts(self, word: list[str] | tuple[str, ...]) -> bool:
        cur = set(self.start)
        for a in word:
            cur = {q2 for q in cur for q2 in self.delta[q].get(a, ())}
            if not cur:
                return False
        return bool(cur & self.accepting)


def compile_rpq(r: Rpq | str) -> Automaton:
    """Thompson construction followed by epsilon elimination.

    State 0 is the only start state.
    """
    if isinstance(r, str):
        r = parse_rpq(r)
    eps: list[set[int]] = []
    trans: list[list[tuple[str, int]]] = []

    def new() -> int:
        eps.append(set())
        trans.append([])
        return len(eps) - 1

    def build(n: Rpq) -> tuple[int, int]:
        match n:
            case Sym("W"):
                return build(Alt(Sym("Wpr"), Sym("Wsc")))
            case Sym(label) if label in ALPHABET:
                s, f = new(), new()
                trans[s].append((label, f))
                return s, f
            case Concat(a, b):
                s1, f1 = build(a)
                s2, f2 = build(b)
                eps[f1].add(s2)
                return s1, f2
            case Alt(a, b):
                s, f = new(), new()
                for part in (a, b):
                    ps, pf = build(part)
                    eps[s].add(ps)
                    eps[pf].add(f)
                return s, f
            case Star(a) | Plus(a):
                s, f = new(), new()
                ps, pf = build(a)
                eps[s].add(ps)
                eps[pf].update((ps, f))
                if isinstance(n, Star):
                    eps[s].add(f)
                return s, f
        raise MalformedExpression(f"not an expression: {n!r}")

    start, final = build(r)
    # Keep the start state and the targets of labeled transitions only.
    keep = [start] + sorted({t for ts in trans for _, t in ts} - {start})
    index = {q: i for i, q in enumerate(keep)}
    delta = []
    accepting = set()
    for q in keep:
        closure = _eps_closure(eps, q)
        if final in closure:
            accepting.add(index[q])
        step: dict[str, set[int]] = {}
        for p in closure:
            for a, t in trans[p]:
                step.setdefault(a, set()).add(index[t])
        delta.append({a: frozenset(ts) for a, ts in sorted(step.items())})
    return Automaton(len(keep), frozenset({0}), frozenset(accepting), tuple(delta))


def _eps_closure(eps: list[set[int]], q: int) -> frozenset[int]:
    seen, stack = {q}, [q]
    while stack:
        for t in eps[stack.pop()]:
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return frozenset(seen)
