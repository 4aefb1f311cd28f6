import csv
import io
import json
import subprocess
import sys

import pytest

from n2vx.cli import main


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(args, capsys):
    code, out, _ = run(args, capsys)
    return code, json.loads(out)


def test_classify_in_w(capsys):
    code, rec = run_json(["classify", "--m", "1", "--h", "1/6", "--q", "1/3"], capsys)
    assert code == 0
    assert rec["command"] == "classify"
    assert rec["inputs"] == {"m": "1", "h": "1/6", "q": "1/3"}
    assert rec["result"]["verdict"] == "InW"
    assert rec["result"]["witness"] == {"r": 1, "i": 1, "j": "3/2", "k": "1/2"}


def test_classify_in_d(capsys):
    code, rec = run_json(["classify", "--m", "1/2", "--h", "1/8", "--q", "0"], capsys)
    assert code == 0
    assert rec["result"]["verdict"] == "InD"
    assert rec["result"]["witness"] == {"r": "1/2"}


def test_classify_not_admissible(capsys):
    code, rec = run_json(["classify", "--m", "-2", "--h", "0", "--q", "0"], capsys)
    assert code == 0 and rec["result"]["verdict"] == "NotAdmissible"


def test_inputs_are_canonical(capsys):
    code, rec = run_json(["classify", "--m", "2/2", "--h", "+2/12", "--q", "-0"], capsys)
    assert rec["inputs"] == {"m": "1", "h": "1/6", "q": "0"}


@pytest.mark.parametrize("args", [
    ["classify", "--m", "1", "--h", "0.5", "--q", "0"],
    ["classify", "--m", "1", "--h", "1 /2", "--q", "0"],
    ["classify", "--m", "1", "--h", "1/6"],
    ["gram", "--h", "0", "--q", "0", "--c", "1", "--level", "1/3", "--charge", "1"],
    ["gram", "--h", "0", "--q", "0", "--c", "1", "--level", "1/2", "--charge", "1/2"],
    ["verify", "--suite", "ks"],
    ["frobnicate"],
    ["enum", "--what", "W", "--m", "-1"],
])
def test_parse_errors_exit_one(args, capsys):
    code, out, err = run(args, capsys)
    assert code == 1
    assert out == "" and err


def test_enum_counts(capsys):
    assert run_json(["enum", "--what", "S", "--m", "1/2"], capsys)[1]["result"]["count"] == 8
    assert run_json(["enum", "--what", "W", "--m", "1"], capsys)[1]["result"]["count"] == 3
    assert run_json(["enum", "--what", "P", "--m", "1"], capsys)[1]["result"]["count"] == 2


def test_enum_w_csv_columns(capsys):
    code, out, _ = run(["enum", "--what", "W", "--m", "1", "--format", "csv"], capsys)
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["r", "i", "j", "k", "h", "q"]
    assert rows[1:] == [["0", "0", "1/2", "1/2", "0", "0"], ["1", "0", "1/2", "3/2", "1/6", "-1/3"],
                        ["1", "1", "3/2", "1/2", "1/6", "1/3"]]


def test_table_format(capsys):
    code, out, _ = run(["enum", "--what", "S", "--m", "1", "--format", "table"], capsys)
    assert out.splitlines() == ["r", "-", "0", "1"]


def test_gram(capsys):
    _, rec = run_json(["gram", "--h", "0", "--q", "0", "--c", "1", "--level", "1/2", "--charge", "1"], capsys)
    assert rec["result"]["gram"] == [["0"]]
    _, rec = run_json(["gram", "--h", "1", "--q", "0", "--c", "1", "--level", "1/2", "--charge", "1"], capsys)
    assert rec["result"]["gram"] == [["2"]]
    assert rec["inputs"]["level"] == "1/2"


def test_singular(capsys):
    _, rec = run_json(["singular", "--h", "0", "--q", "0", "--c", "-3", "--level", "1/2", "--charge", "-1"], capsys)
    assert rec["result"]["count"] == 1
    assert rec["result"]["vectors"] == [{"G-(-1/2)": "1"}]


def test_verify_fminus(capsys):
    code, rec = run_json(["verify", "--suite", "fminus"], capsys)
    assert code == 0 and rec["result"]["passed"]


def test_verify_jacobi(capsys):
    code, rec = run_json(["verify", "--suite", "jacobi", "--depth", "1"], capsys)
    assert code == 0 and rec["result"]["passed"]


def test_verify_ks_reports_assignment(capsys):
    code, rec = run_json(["verify", "--suite", "ks", "--m", "1/2", "--depth", "1"], capsys)
    assert code == 0
    assert rec["result"]["c"] == "3/5"
    assert rec["result"]["species_assignment"] == "psi+f/psi-e"


def test_verify_antiks_depth_capped(capsys, monkeypatch):
    monkeypatch.setenv("N2VX_MAX_DEPTH", "1")
    code, rec = run_json(["verify", "--suite", "anti-ks", "--m", "1", "--depth", "2"], capsys)
    assert code == 0
    assert rec["inputs"]["depth"] == "1" and rec["inputs"]["depth_requested"] == "2"


def test_verify_casimir_single_point(capsys):
    code, rec = run_json(["verify", "--suite", "casimir-identity", "--m", "1", "--h", "1/6", "--q", "1/3"], capsys)
    assert code == 0 and rec["result"]["points"][0]["scalar"] == "3/2"


def test_verification_failure_exits_two(capsys, monkeypatch):
    from n2vx import cli, coset
    monkeypatch.setattr(coset, "casimir_identity_check",
                        lambda h, q, m: coset.RelationReport("casimir-identity", False))
    code, _, _ = run(["verify", "--suite", "casimir-identity", "--m", "1", "--h", "0", "--q", "0"], capsys)
    assert code == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "rec.json"
    code, out, _ = run(["classify", "--m", "1", "--h", "0", "--q", "0", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["result"]["verdict"] == "InW"


def test_json_roundtrip(capsys):
    _, rec = run_json(["classify", "--m", "1/2", "--h", "-3/40", "--q", "0"], capsys)
    again = [rec["command"]] + [x for k, v in rec["inputs"].items() for x in (f"--{k}", v)]
    _, rec2 = run_json(again, capsys)
    assert rec2 == rec


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "n2vx", "enum", "--what", "S", "--m", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["values"] == ["0", "1"]
