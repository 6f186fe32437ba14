import io
import json
import subprocess
import sys

import pytest

from gameprov.cli import run

from .conftest import FIXTURES

EDGES = str(FIXTURES / "fig1.edges")
APX = str(FIXTURES / "fig1.apx")


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "argv, golden",
    [
        (["solve", EDGES], "fig1.solved.json"),
        (["solve", EDGES, "--format", "dot"], "fig1.solved.dot"),
        (["trace", EDGES], "fig1.trace"),
        (["prov", EDGES, "--node", "d", "--kind", "primary"], "fig1.prov_d_primary.json"),
        (["prov", EDGES, "--node", "d", "--kind", "actual", "--format", "dot"], "fig1.prov_d_actual.dot"),
        (["prov", EDGES, "--node", "d", "--kind", "potential", "--format", "dot"], "fig1.prov_d_potential.dot"),
        (["af", APX], "fig1.af.json"),
        (["af", APX, "--format", "dot"], "fig1.af.dot"),
        (["af", APX, "--explain", "c", "--kind", "primary"], "fig1.af_explain_c.json"),
        (["convert", EDGES, "--to", "apx"], "fig1.apx"),
    ],
)
def test_golden(argv, golden):
    code, out, err = call(*argv)
    assert code == 0, err
    assert out == (FIXTURES / golden).read_text()


def test_solve_contains_c():
    assert '"id":"c","value":"lost","len":4' in call("solve", EDGES)[1]


def test_trace_lines():
    assert call("trace", EDGES)[1].splitlines() == [
        "step 0 RR: b f j o",
        "step 1 GR: a d i",
        "step 2 RR: g h",
        "step 3 GR: e",
        "step 4 RR: c",
        "step inf DRAW:",
    ]


def test_prov_rpq_matches_kind():
    by_kind = call("prov", EDGES, "--node", "c", "--kind", "primary")[1]
    by_rpq = call("prov", EDGES, "--node", "c", "--rpq", "(L.Wpr)*")[1]
    assert by_kind == by_rpq


def test_validate_ok():
    assert call("validate", EDGES)[:2] == (0, "ok\n")


def test_validate_labeled(tmp_path):
    good = tmp_path / "good.json"
    good.write_text((FIXTURES / "fig1.solved.json").read_text())
    assert call("validate", str(good), "--labeled")[:2] == (0, "ok\n")

    doc = json.loads(good.read_text())
    for n in doc["nodes"]:
        if n["id"] == "g":
            n["value"], n["len"] = "won", 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out, _ = call("validate", str(bad), "--labeled")
    assert code == 2
    assert "LabelMismatch at g: won without a lost follower" in out.splitlines()
    assert "EdgeTypeMismatch at g->d: delaying" in out.splitlines()


def test_convert_roundtrips(tmp_path):
    for fmt, suffix in [("edgelist", ".edges"), ("json", ".json"), ("apx", ".apx")]:
        path = tmp_path / f"g{suffix}"
        path.write_text(call("convert", EDGES, "--to", fmt)[1])
        assert call("solve", str(path))[1] == (FIXTURES / "fig1.solved.json").read_text()
    dot = call("convert", EDGES, "--to", "dot")[1]
    assert dot.startswith("digraph {") and '"d" -> "f"' in dot


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus", EDGES],
        ["solve", EDGES, "--format", "png"],
        ["prov", EDGES, "--node", "d"],
        ["prov", EDGES, "--node", "zz", "--kind", "actual"],
        ["prov", EDGES, "--node", "d", "--rpq", "L.."],
        ["solve", str(FIXTURES / "missing.edges")],
        ["solve", EDGES, "--unknown-flag"],
    ],
)
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 1 and out == "" and err.startswith("gameprov:")


def test_parse_error(tmp_path):
    p = tmp_path / "bad.edges"
    p.write_text("a b\nc\n")
    code, _, err = call("solve", str(p))
    assert code == 1 and "line 2" in err


def test_stdin_and_determinism():
    text = (FIXTURES / "fig1.edges").read_text()
    outs = [
        subprocess.run(
            [sys.executable, "-m", "gameprov.cli", "solve", "-"],
            input=text, capture_output=True, text=True, check=True,
        ).stdout
        for _ in range(2)
    ]
    assert outs[0] == outs[1] == (FIXTURES / "fig1.solved.json").read_text()
