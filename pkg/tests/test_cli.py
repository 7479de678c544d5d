import io
import json
import subprocess
import sys

import pytest

from mmatrix import cli

import reference_tables as ref


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def parse_matrix(text):
    return [[int(x) for x in line.split()] for line in text.splitlines()]


@pytest.mark.parametrize("argv,expected", [
    (["--n", "5", "--type", "I", "--stage", "base"], ref.N5_BASE),
    (["--n", "5", "--type", "I"], ref.N5_SIGN),
    (["--n", "7", "--type", "I"], ref.N7_SIGN),
    (["--n", "4", "--type", "II"], ref.N4_SIGN),
    (["--n", "6", "--type", "II", "--convention", "flipped"], ref.N6_SIGN_PRINTED),
    (["--n", "11", "--type", "I", "--convention", "flipped"], ref.N11_SIGN_PRINTED),
])
def test_generate_text(argv, expected):
    code, out, _ = run("generate", *argv)
    assert code == 0
    assert parse_matrix(out) == expected
    assert out.endswith("\n")


def test_generate_csv_and_json():
    code, out, _ = run("generate", "--n", "4", "--type", "II", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "-1,1,-1,1"
    code, out, _ = run("generate", "--n", "4", "--type", "II", "--format", "json")
    doc = json.loads(out)
    assert doc["schema"] == "mmatrix.matrix/1"
    assert doc["entries"] == ref.N4_SIGN


@pytest.mark.parametrize("argv", [
    ["generate", "--n", "9", "--type", "I"],
    ["generate", "--n", "8", "--type", "II"],
    ["generate", "--n", "5", "--type", "III"],
    ["generate", "--n", "5", "--type", "I", "--format", "dot"],
    ["graph", "--n", "5", "--type", "I", "--format", "csv"],
    ["design", "--n", "5", "--type", "I", "--convention", "flipped"],
    ["generate", "--type", "I"],
])
def test_usage_errors(argv):
    code, _, _ = run(*argv)
    assert code == 2


def test_inadmissible_message():
    code, out, err = run("generate", "--n", "9", "--type", "I")
    assert code == 2 and out == ""
    assert "9 is not prime" in err


def test_ortho_n11():
    code, out, _ = run("ortho", "--n", "11", "--type", "I")
    assert code == 0
    assert "theoretical: -9 -5 -1 3 7 11" in out
    assert "missing: -5 7" in out
    doc = json.loads(run("ortho", "--n", "11", "--type", "I", "--format", "json", "--gram")[1])
    assert [r["value"] for r in doc["realized"]] == [-9, -1, 3]
    assert doc["gram"][1][10] == -9
    assert doc["spectrum_sum"] == 6


def test_design_exit_codes():
    code, out, _ = run("design", "--n", "11", "--type", "I")
    assert code == 0
    assert "overall: pass" in out
    code, _, err = run("design", "--n", "3", "--type", "I")
    assert code == 3 and "degenerate" in err
    code, out, err = run("design", "--n", "17", "--type", "I")
    assert code == 4
    assert "INVALID" in out
    assert "association scheme" in err


def test_design_csv_is_incidence():
    code, out, _ = run("design", "--n", "4", "--type", "II", "--format", "csv")
    assert code == 0
    assert [[int(x) for x in line.split(",")] for line in out.splitlines()] == ref.N4_INCIDENCE


@pytest.mark.parametrize("n,mtype", [("5", "I"), ("11", "I"), ("6", "II"), ("17", "I"), ("16", "II")])
def test_design_json_round_trip(n, mtype):
    code, out, _ = run("design", "--n", n, "--type", mtype, "--format", "json")
    doc = json.loads(out)
    assert doc["schema"] == "mmatrix.design/1"
    again = cli.revalidate(doc)
    assert [x.passed for x in again] == [x["passed"] for x in doc["identities"]]
    assert all(x.passed for x in again)


def test_revalidate_catches_tampering():
    doc = json.loads(run("design", "--n", "11", "--type", "I", "--format", "json")[1])
    doc["classes"][1]["n"] += 1
    assert not all(x.passed for x in cli.revalidate(doc))


@pytest.mark.parametrize("n,mtype,edges", [("5", "I", 8), ("6", "II", 18), ("4", "II", 8)])
def test_graph_dot(n, mtype, edges):
    code, out, _ = run("graph", "--n", n, "--type", mtype)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "graph G {" and lines[-1] == "}"
    assert sum("--" in line for line in lines) == edges


def test_graph_dot_n5_edges():
    out = run("graph", "--n", "5", "--type", "I")[1]
    assert "  t1 -- b1;" in out and "  t1 -- b3;" in out
    assert "t1 -- b2;" not in out


def test_graph_text_and_json():
    out = run("graph", "--n", "5", "--type", "I", "--format", "text")[1]
    assert "edges: 8" in out and "regular: yes" in out and "degree: 2" in out
    doc = json.loads(run("graph", "--n", "6", "--type", "II", "--format", "json")[1])
    assert doc["regular"] and doc["degree"] == 3 and doc["components"] == 1
    assert len(doc["edges"]) == 18


@pytest.mark.parametrize("argv", [
    ["generate", "--n", "13", "--type", "I"],
    ["ortho", "--n", "12", "--type", "II", "--format", "json"],
    ["design", "--n", "11", "--type", "I", "--format", "json"],
    ["graph", "--n", "10", "--type", "II"],
])
def test_deterministic(argv):
    assert run(*argv) == run(*argv)


def test_out_file(tmp_path):
    target = tmp_path / "m.txt"
    code, out, _ = run("generate", "--n", "5", "--type", "I", "--out", str(target))
    assert code == 0 and out == ""
    assert parse_matrix(target.read_text()) == ref.N5_SIGN


def test_out_unwritable(tmp_path):
    code, _, err = run("generate", "--n", "5", "--type", "I",
                       "--out", str(tmp_path / "missing" / "m.txt"))
    assert code == 1 and "cannot write" in err


def test_verify_small_range():
    code, out, _ = run("verify", "--type", "I", "--max", "13")
    assert code == 0
    assert "n=13" in out and "all checks passed" in out
    assert "n=2 " not in out


def test_verify_reports_findings_without_failing():
    code, out, _ = run("verify", "--type", "II", "--min", "16", "--max", "16", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    (order,) = doc["orders"]
    assert order["passed"]
    assert any("not an association scheme" in f for f in order["findings"])


def test_errata_command():
    code, out, _ = run("errata", "--format", "json")
    assert code == 0
    keys = {e["key"] for e in json.loads(out)}
    assert {"type2-spectrum-sum", "type1-graph-size", "type1-n5-class-sizes"} <= keys


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mmatrix", "generate", "--n", "3", "--type", "I"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "1 1 1\n1 1 -1\n1 -1 1\n"
