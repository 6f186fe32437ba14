"""Seeded random game graphs and argumentation frameworks for experiments."""

from __future__ import annotations

import random
from collections.abc import Iterator
from dataclasses import dataclass

from .argumentation import ArgumentationFramework
from .graph import GameGraph, build_graph


@dataclass
class RandomGraphConfig:
    count: int = 1000
    min_nodes: int = 1
    max_nodes: int = 30
    # Edge probability is swept linearly across the batch.
    min_density: float = 0.02
    max_density: float = 0.35
    self_loops: bool = True
    seed: int = 20231017


def random_graph(rng: random.Random, n: int, p: float, self_loops: bool = True) -> GameGraph:
    names = [f"n{i}" for i in range(n)]
    moves = [
        (a, b)
        for a in names
        for b in names
        if (self_loops or a != b) and rng.random() < p
    ]
    return build_graph(names, moves)


def random_graphs(cfg: RandomGraphConfig) -> Iterator[GameGraph]:
    rng = random.Random(cfg.seed)
    for i in range(cfg.count):
        t = i / max(cfg.count - 1, 1)
        p = cfg.min_density + t * (cfg.max_density - cfg.min_density)
        n = rng.randint(cfg.min_nodes, cfg.max_nodes)
        yield random_graph(rng, n, p, cfg.self_loops)


def random_frameworks(cfg: RandomGraphConfig) -> Iterator[ArgumentationFramework]:
    for g in random_graphs(cfg):
        yield ArgumentationFramework.build(g.positions, g.moves)
