"""Solve a batch of random game graphs and report value/edge-type statistics,
cross-checking solve against solve_fast and validate_solution."""

import argparse
import time
from collections import Counter

from gameprov.random_graphs import RandomGraphConfig, random_graphs
from gameprov.solver import solve, solve_fast, validate_solution


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--max-nodes", type=int, default=30)
    ap.add_argument("--seed", type=int, default=RandomGraphConfig.seed)
    args = ap.parse_args()
    cfg = RandomGraphConfig(count=args.count, max_nodes=args.max_nodes, seed=args.seed)

    values, edges = Counter(), Counter()
    problems = 0
    t0 = time.perf_counter()
    for g in random_graphs(cfg):
        s, _ = solve(g)
        problems += (solve_fast(g) != s) + len(validate_solution(s))
        values.update(lab.value.value for lab in s.node_labels.values())
        edges.update(a.edge_type.value for a in s.edge_annotations.values())
    elapsed = time.perf_counter() - t0

    print(f"{cfg.count} graphs, {elapsed:.2f}s, {problems} problems")
    for name, c in (("values", values), ("edge types", edges)):
        print(f"{name}:")
        for k, n in sorted(c.items()):
            print(f"  {k:14s} {n}")


if __name__ == "__main__":
    main()
