import json
import subprocess
import sys

import pytest

from pgeigen.cli import parse_phi, run


def call(argv, capsys):
    code = run(argv)
    return code, capsys.readouterr().out


def test_qnum(capsys):
    code, out = call(["qnum", "--q", "2", "--n", "4"], capsys)
    assert code == 0
    assert json.loads(out) == {"q": 2, "n": 4, "galois": 67, "qbinom": [1, 15, 35, 15, 1]}


def test_enum_streams_lines(capsys):
    code, out = call(["enum", "--q", "3", "--n", "2"], capsys)
    lines = out.splitlines()
    assert code == 0 and len(lines) == 6
    assert json.loads(lines[0]) == {"n": 2, "k": 0, "cols": []}
    code, out = call(["enum", "--q", "2", "--n", "3", "--k", "1"], capsys)
    assert len(out.splitlines()) == 7


def test_basis_base_cases(capsys):
    code, out = call(["basis", "--q", "2", "--n", "1"], capsys)
    recs = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(recs) == 2
    assert recs[0]["index"] == ["0"] and recs[1]["index"] == ["1"]
    v0 = {json.dumps(e["subspace"], sort_keys=True): e["scalar"]["coeffs"] for e in recs[0]["vector"]["entries"]}
    v1 = {json.dumps(e["subspace"], sort_keys=True): e["scalar"]["coeffs"] for e in recs[1]["vector"]["entries"]}
    zero = json.dumps({"n": 1, "k": 0, "cols": []}, sort_keys=True)
    full = json.dumps({"n": 1, "k": 1, "cols": [[1]]}, sort_keys=True)
    assert v0 == {zero: [["1/1"]], full: [["1/1"]]}
    assert v1 == {zero: [["0/1"], ["1/1"]], full: [["-1/1"]]}


def test_basis_evaluated(capsys):
    code, out = call(["basis", "--q", "3", "--n", "1", "--phi", "1/2"], capsys)
    rec = json.loads(out.splitlines()[1])
    assert rec["eigenvalue"] == ["-5/4", "0/1"]


def test_matrix_export(capsys):
    code, out = call(["matrix", "--q", "2", "--n", "2"], capsys)
    doc = json.loads(out)
    assert code == 0 and len(doc["subspaces"]) == 5
    assert doc["field"] == {"p": 2, "m": 1, "modulus": [0, 1]}
    assert len(doc["adjacency"]) == 5 + 2 * 6 and len(doc["dual"]) == 5
    assert doc["dual"][-1]["value"] == "1/4"


def test_verify_all_passes(capsys):
    code, out = call(["verify", "--q", "2", "--n", "3", "--suite", "all"], capsys)
    reps = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and [r["suite"] for r in reps] == ["eigen", "orth", "qpoly", "structure"]
    assert all(r["passed"] for r in reps)


def test_verify_skip_is_nonzero(capsys):
    code, out = call(["verify", "--q", "2", "--n", "3", "--suite", "eigen", "--max-subspaces", "5"], capsys)
    assert code == 1 and json.loads(out)["skipped"]


def test_crosscheck(capsys):
    code, out = call(["crosscheck", "--q", "3", "--n", "2", "--phi", "0.5"], capsys)
    assert code == 0 and json.loads(out)["details"]["phi"] == "1/2"


@pytest.mark.parametrize("argv", [["bogus"], ["qnum", "--q", "2"], ["qnum", "--q", "6", "--n", "2"],
                                  ["qnum", "--q", "2", "--n", "2", "--frob"],
                                  ["crosscheck", "--q", "2", "--n", "2", "--phi", "-1"],
                                  ["crosscheck", "--q", "2", "--n", "2", "--phi", "symbolic"],
                                  ["verify", "--q", "2", "--n", "1", "--suite", "nope"]])
def test_usage_errors(argv, capsys):
    assert run(argv) == 2


def test_parse_phi():
    from fractions import Fraction
    assert parse_phi("symbolic") is None
    assert parse_phi("3/4") == Fraction(3, 4)
    assert parse_phi("0.25") == Fraction(1, 4)


def strip_seconds(text):
    out = []
    for line in text.splitlines():
        d = json.loads(line)
        d.pop("seconds", None)
        out.append(d)
    return out


def test_output_is_deterministic_and_independent_of_workers(tmp_path):
    base = [sys.executable, "-m", "pgeigen.cli", "verify", "--q", "2", "--n", "2",
            "--suite", "all", "--pair-budget", "4", "--seed", "3"]
    a = subprocess.run(base + ["--workers", "1"], capture_output=True, text=True, check=True).stdout
    b = subprocess.run(base + ["--workers", "3"], capture_output=True, text=True, check=True).stdout
    assert strip_seconds(a) == strip_seconds(b)
    basis = [sys.executable, "-m", "pgeigen.cli", "basis", "--q", "3", "--n", "2"]
    x = subprocess.run(basis, capture_output=True, text=True, check=True).stdout
    y = subprocess.run(basis, capture_output=True, text=True, check=True).stdout
    assert x == y


def test_out_file(tmp_path):
    target = tmp_path / "q.json"
    assert run(["qnum", "--q", "3", "--n", "2", "--out", str(target)]) == 0
    assert json.loads(target.read_text())["galois"] == 6
