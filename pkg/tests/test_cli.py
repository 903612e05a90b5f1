from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from oracles import catalan
from treehopf import cli, diffop

MAPS = Path(__file__).resolve().parent.parent / "maps"
CATALAN = str(MAPS / "catalan.map")
TRIANGULAR = str(MAPS / "triangular.map")


def run(*argv):
    code, doc, _, _ = cli.run(list(argv))
    return code, doc


def test_orderpoly():
    code, doc = run("orderpoly", "(1 (1))")
    assert code == 0 and doc["status"] == "ok"
    assert doc["payload"]["text"] == "1/2*s^2 + 1/2*s"
    assert doc["payload"]["coefficients"] == ["0", "1/2", "1/2"]
    code, doc = run("orderpoly", "--strict", "(1 (1))")
    assert doc["payload"]["text"] == "1/2*s^2 - 1/2*s"


def test_invert_both_catalan():
    code, doc = run("invert", "--map", CATALAN, "--method", "both")
    assert code == 0
    p = doc["payload"]
    assert p["agreement"] is True and p["first_difference"] is None
    coeffs = p["tree"][0]["coefficients"]
    assert [c["t_power"] for c in coeffs] == list(range(9))
    for k, c in enumerate(coeffs):
        expected = f"{catalan(k)}*" if catalan(k) != 1 else ""
        assert c["series"] == expected + "*".join(["z1"] * (k + 1))
    assert p["fixedpoint"] == p["tree"]


def test_invert_both_reports_difference(monkeypatch):
    real = diffop.fixed_point_inverse

    def skewed(F):
        G = real(F)
        bump = diffop.NCSeries.monomial(F.trunc, (0, 0, 0), 2, 1)
        return diffop.SeriesVector([G[0] + bump] + list(G[1:]))

    monkeypatch.setattr(diffop, "fixed_point_inverse", skewed)
    code, doc = run("invert", "--map", CATALAN, "--method", "both")
    assert code == 1 and doc["status"] == "fail"
    diff = doc["payload"]["first_difference"]
    assert doc["payload"]["agreement"] is False
    assert diff == {"component": "z1", "t_power": 2, "word": "z1*z1*z1", "values": ["2", "3"]}


def test_verify_hopf():
    code, doc = run("verify", "hopf", "--algebra", "gl", "--max-weight", "4")
    assert code == 0 and doc["payload"]["ok"]
    code, doc = run("verify", "hopf", "--algebra", "ck", "--labels", "1,2", "--max-weight", "3")
    assert code == 0


def test_verify_suites():
    assert run("verify", "inject", "--max-weight", "3")[0] == 0
    assert run("verify", "ncs", "--source", "trees", "--order", "4")[0] == 0
    assert run("verify", "ncs", "--source", "map", "--map", TRIANGULAR, "--order", "3")[0] == 0
    assert run("verify", "cd2", "--map", TRIANGULAR, "--max-weight", "3")[0] == 0


def test_tree_commands():
    code, doc = run("trees", "enum", "--labels", "1", "--max-weight", "5")
    assert doc["payload"]["counts_by_weight"] == {"1": 1, "2": 1, "3": 2, "4": 4, "5": 9}
    code, doc = run("trees", "cuts", "(1 (1 (1)))")
    assert len(doc["payload"]["cuts"]) == 3
    code, doc = run("theta", "(0 (1 (1)))")
    assert doc["payload"]["theta"] == "1/2"


def test_hopf_commands():
    code, doc = run("hopf", "product", "--algebra", "gl", "(0 (1))", "(0 (1))")
    assert doc["payload"]["result"] == "1*(0 (1) (1)) + 1*(0 (1 (1)))"
    code, doc = run("hopf", "coproduct", "--algebra", "ck", "(1 (1))")
    assert len(doc["payload"]["terms"]) == 3
    code, doc = run("hopf", "antipode", "--algebra", "gl", "(0 (1))")
    assert doc["payload"]["result"] == "-1*(0 (1))"
    code, doc = run("pairing", "(0 (1) (1))", "[(1) (1)]")
    assert doc["payload"]["value"] == "2"


def test_series_commands():
    code, doc = run("dlog", "--map", CATALAN)
    coeffs = doc["payload"]["dlog"][0]["coefficients"]
    assert coeffs[0] == {"t_power": 1, "series": "-z1*z1"}
    assert coeffs[1] == {"t_power": 2, "series": "-z1*z1*z1"}
    code, doc = run("power", "--map", CATALAN, "--m", "2")
    coeffs = doc["payload"]["power"][0]["coefficients"]
    assert [c["series"] for c in coeffs[:4]] == ["z1", "-2*z1*z1", "2*z1*z1*z1", "-z1*z1*z1*z1"]
    code, doc = run("flow", "--map", CATALAN, "--s", "s")
    assert doc["payload"]["flow"]["1"][0]["coefficients"][0] == {"t_power": 1, "series": "-z1*z1"}
    code, doc = run("flow", "--map", CATALAN, "--s", "-1")
    _, inv = run("invert", "--map", CATALAN)
    assert doc["payload"]["flow"] == inv["payload"]["tree"]


def test_separating():
    code, doc = run("separating", "--tree", "(1 (1))")
    assert code == 0
    assert doc["payload"]["automorphism"]["vars"] == ["z1", "z2", "z3"]
    assert doc["payload"]["P_T"] != ["0", "0", "0"]


@pytest.mark.parametrize("argv", [
    ["orderpoly", "(1 (0))"],
    ["theta", "(1"],
    ["trees", "enum", "--labels", "0,1", "--max-weight", "3"],
    ["flow", "--map", CATALAN, "--s", "x"],
    ["invert", "--map", "/nonexistent.map"],
    ["separating", "--tree", "(0 (1))"],
    ["hopf", "antipode", "--algebra", "gl", "(0)", "(0)"],
])
def test_usage_errors_exit_two(argv):
    code, doc = run(*argv)
    assert code == 2 and doc["status"] == "fail"
    assert doc["payload"]["error"]


def test_parse_error_reports_position():
    code, doc = run("theta", "(1 (x))")
    assert code == 2 and "position 4" in doc["payload"]["error"]


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as info:
        cli.run(["hopf", "product"])
    assert info.value.code == 2


def test_determinism():
    argv = ["invert", "--map", TRIANGULAR, "--method", "both"]
    outs = {json.dumps(run(*argv)[1], sort_keys=True) for _ in range(3)}
    assert len(outs) == 1


def test_entry_point_and_timing():
    proc = subprocess.run([sys.executable, "-m", "treehopf", "--timing", "orderpoly", "(1 (1))"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["payload"]["text"] == "1/2*s^2 + 1/2*s"
    assert proc.stderr.startswith("elapsed_ms=")
    again = subprocess.run([sys.executable, "-m", "treehopf", "orderpoly", "(1 (1))"],
                           capture_output=True, text=True, check=True)
    assert again.stdout == proc.stdout and again.stderr == ""
