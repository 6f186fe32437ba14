"""Exit criteria.  Each test records one PASS/FAIL line, printed in the
terminal summary; run directly with ``python -m pytest tests/test_acceptance.py``."""

import io
import time

import pytest

from gameprov.argumentation import (
    FROM_VALUE,
    AfLabel,
    ArgumentationFramework,
    af_to_game,
    grounded_labeling,
)
from gameprov.cli import run
from gameprov.formats import export_dot, export_json
from gameprov.provenance import (
    Kind,
    actual_provenance,
    match_rpq,
    potential_provenance,
    primary_provenance,
    standard_pattern,
)
from gameprov.oracle import compare, grounded_by_characteristic, oracle_solve
from gameprov.random_graphs import RandomGraphConfig, random_frameworks, random_graphs
from gameprov.rpq import compile_rpq
from gameprov.solver import (
    EdgeAnnotation,
    EdgeType,
    Rule,
    Value,
    solve,
    solve_fast,
    validate_solution,
)

from .conftest import ACCEPTANCE, FIXTURES

W, L = Value.WON, Value.LOST

RANDOM_SUITE = RandomGraphConfig(count=1000, min_nodes=1, max_nodes=30, min_density=0.02, max_density=0.35)
ORACLE_SUITE = RandomGraphConfig(count=200, min_nodes=1, max_nodes=8, min_density=0.1, max_density=0.45, seed=7)
AF_SUITE = RandomGraphConfig(count=100, min_nodes=1, max_nodes=12, min_density=0.05, max_density=0.4, seed=11)


def record(n, name, ok, detail=""):
    ACCEPTANCE.append(f"AC{n} {'PASS' if ok else 'FAIL'} {name}" + (f" ({detail})" if detail else ""))
    assert ok, detail


@pytest.fixture(scope="module")
def random_suite():
    return list(random_graphs(RANDOM_SUITE))


def test_ac1_fig1_node_labels(fig1):
    t0 = time.perf_counter()
    s, _ = solve(fig1)
    elapsed = time.perf_counter() - t0
    expected = {x: (L, 0) for x in "bfjo"}
    expected.update({x: (W, 1) for x in "adi"})
    expected.update({"g": (L, 2), "h": (L, 2), "e": (W, 3), "c": (L, 4)})
    got = {x: (lab.value, lab.length) for x, lab in s.node_labels.items()}
    record(1, "running-example node labels", got == expected and elapsed < 1.0, f"{elapsed:.4f}s")


def test_ac2_fig1_edge_types(solved_fig1):
    expected = {
        ("d", "f"): EdgeAnnotation(EdgeType.WIN_PRIMARY, 1),
        ("d", "g"): EdgeAnnotation(EdgeType.WIN_SECONDARY, 3),
        ("d", "h"): EdgeAnnotation(EdgeType.WIN_SECONDARY, 3),
        ("d", "e"): EdgeAnnotation(EdgeType.BLUNDER_WW, None),
        ("c", "d"): EdgeAnnotation(EdgeType.DELAYING, 2),
        ("c", "e"): EdgeAnnotation(EdgeType.DELAYING, 4),
        ("a", "b"): EdgeAnnotation(EdgeType.WIN_PRIMARY, 1),
        ("a", "o"): EdgeAnnotation(EdgeType.WIN_PRIMARY, 1),
    }
    bad = [m for m, a in expected.items() if solved_fig1.edge_annotations[m] != a]
    record(2, "running-example edge typing", not bad, f"mismatched {bad}" if bad else "")


def test_ac3_fig1_provenance(fig1, solved_fig1):
    pt = potential_provenance(fig1, "d")
    ac = actual_provenance(solved_fig1, "d")
    pr = primary_provenance(solved_fig1, "d")
    prc = primary_provenance(solved_fig1, "c")
    checks = {
        "P_pt(d) 7/8": (len(pt.nodes), len(pt.edges)) == (7, 8),
        "P_ac(d) 6/6 without e": (len(ac.nodes), len(ac.edges)) == (6, 6) and "e" not in ac.nodes,
        "P_pr(d)": pr.nodes == ("d", "f") and list(pr.edges) == [("d", "f")],
        "P_pr(c) both delays": {("c", "d"), ("c", "e")} <= set(prc.edges),
    }
    failed = [k for k, ok in checks.items() if not ok]
    record(3, "provenance subgraphs", not failed, ", ".join(failed))


def test_ac4_step_equals_length(fig1, random_suite):
    violations = 0
    for g in [fig1, *random_suite]:
        s, trace = solve(g)
        for step in trace.steps:
            for x in step.newly_labeled:
                lab = s.node_labels[x]
                if step.rule is Rule.DRAW:
                    violations += lab.value is not Value.DRAWN
                else:
                    violations += lab.value is Value.DRAWN or step.index != lab.length
    record(4, "step/length agreement", violations == 0, f"{violations} violations over {len(random_suite) + 1} graphs")


def _structural_violations(g, patterns):
    s, _ = solve(g)
    out = []
    if solve_fast(g) != s:
        out.append("solve != solve_fast")
    out += [str(v) for v in validate_solution(s)]
    for x in g.positions:
        v = s.node_labels[x].value
        pt = potential_provenance(g, x)
        ac = actual_provenance(s, x)
        pr = primary_provenance(s, x)
        if not (pr.issubgraph(ac) and ac.issubgraph(pt)):
            out.append(f"inclusion chain at {x}")
        if ac != match_rpq(s, x, patterns[(v, Kind.ACTUAL)]):
            out.append(f"actual closure != rpq at {x}")
        if pr != match_rpq(s, x, patterns[(v, Kind.PRIMARY)]):
            out.append(f"primary closure != rpq at {x}")
    return out


def test_ac5_structural_suite(random_suite):
    patterns = {(v, k): compile_rpq(standard_pattern(v, k)) for v in Value for k in (Kind.ACTUAL, Kind.PRIMARY)}
    t0 = time.perf_counter()
    problems = []
    for g in random_suite:
        problems += _structural_violations(g, patterns)
    elapsed = time.perf_counter() - t0
    detail = f"{len(problems)} violations, {elapsed:.1f}s"
    record(5, "structural property suite", not problems and elapsed < 60, detail)


def test_ac6_oracle_equivalence():
    t0 = time.perf_counter()
    mismatches = 0
    graphs = list(random_graphs(ORACLE_SUITE))
    for g in graphs:
        mismatches += len(compare(solve(g)[0], oracle_solve(g)))
    elapsed = time.perf_counter() - t0
    record(6, "oracle equivalence", mismatches == 0 and elapsed < 120, f"{mismatches} mismatches, {elapsed:.1f}s")


def test_ac7_af_correspondence(fig1):
    bad = 0
    for af in random_frameworks(AF_SUITE):
        lab = grounded_labeling(af)
        s = solve(af_to_game(af))[0]
        recolored = {x: FROM_VALUE[n.value] for x, n in s.node_labels.items()}
        ref = grounded_by_characteristic(af.arguments, af.attacks)
        mine = {x: l for x, (l, _) in lab.items()}
        bad += mine != recolored or {x: l.value for x, l in mine.items()} != ref
    lab = grounded_labeling(ArgumentationFramework.from_game(fig1))
    defeated = {x for x, (l, _) in lab.items() if l is AfLabel.DEFEATED}
    accepted = {x for x, (l, _) in lab.items() if l is AfLabel.ACCEPTED}
    fig_ok = defeated == set("adei") and accepted == set("bcfghjo")
    record(7, "AF correspondence", bad == 0 and fig_ok, f"{bad} disagreeing AFs")


def test_ac8_determinism(solved_fig1):
    edges, apx = str(FIXTURES / "fig1.edges"), str(FIXTURES / "fig1.apx")
    invocations = [
        ["solve", edges],
        ["solve", edges, "--format", "dot"],
        ["prov", edges, "--node", "d", "--kind", "actual"],
        ["prov", edges, "--node", "c", "--rpq", "(L.Wpr)*", "--format", "dot"],
        ["af", apx],
        ["af", apx, "--explain", "d", "--kind", "primary", "--format", "dot"],
    ]
    stable = True
    for argv in invocations:
        outs = []
        for _ in range(3):
            buf = io.StringIO()
            stable &= run(argv, buf, io.StringIO()) == 0
            outs.append(buf.getvalue())
        stable &= len(set(outs)) == 1
    golden = (
        export_json(solved_fig1) == (FIXTURES / "fig1.solved.json").read_text()
        and export_dot(solved_fig1) == (FIXTURES / "fig1.solved.dot").read_text()
    )
    record(8, "determinism and golden files", stable and golden, "" if golden else "golden mismatch")
