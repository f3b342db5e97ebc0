import json
import subprocess
import sys

import pytest

from orbitcalc.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_eta_example(capsys):
    code, out, _ = run(["eta", "--source", "soOdd", "[3^3 2^2]"], capsys)
    js = json.loads(out)
    assert code == 0
    assert js["result"] == [5, 5, 2] and js["routes_agree"] is True


def test_compute_prefix_is_equivalent(capsys):
    _, a, _ = run(["eta", "--source", "B", "[3,3,3,2,2]"], capsys)
    _, b, _ = run(["compute", "eta", "--source", "soOdd", "[3^3 2^2]"], capsys)
    assert a == b


def test_dim_example(capsys):
    code, out, _ = run(["dim", "C1", "[1,1]"], capsys)
    assert code == 0 and json.loads(out)["dim"] == 0


def test_criterion_example(capsys):
    code, out, _ = run(["criterion", "C6:{3^3,2^2}"], capsys)
    js = json.loads(out)
    assert code == 0
    assert (js["verdict"], js["lhs"], js["rhs"], js["class"]) == (True, [5, 5, 2], [5, 5, 2], "none")


@pytest.mark.parametrize(
    "argv,token",
    [
        (["transpose", "[3,x]"], "'x'"),
        (["dim", "E6", "[1]"], "'E6'"),
        (["eta", "--source", "gl", "[1]"], "'gl'"),
        (["criterion", "C6:{3^3,2}"], "psi"),
        (["dim", "C2", "[3,1]"], "[3,1]"),
    ],
)
def test_input_errors_exit_2(argv, token, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2 and out == ""
    assert token in err


def test_unknown_identity_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--identity", "nope"])
    assert exc.value.code == 2


def test_verify_lemma41(capsys):
    code, out, _ = run(["verify", "--identity", "lemma41", "--family", "C", "--max-n", "8", "--jobs", "1"], capsys)
    js = json.loads(out)
    assert code == 0 and js["passes"] == js["total"] > 0


def test_verify_prop58_d_report_only(capsys):
    code, out, _ = run(["verify", "--identity", "prop58", "--family", "D", "--max-n", "6", "--jobs", "1"], capsys)
    assert code == 0 and json.loads(out)["report_only"]


def test_verify_collapse_oracle(capsys):
    code, out, _ = run(["verify", "--identity", "collapse-oracle", "--max-size", "10", "--jobs", "1"], capsys)
    js = json.loads(out)
    assert code == 0 and js["passes"] == js["total"]


def test_reports_reproducible(capsys):
    argv = ["verify", "--identity", "prop42", "--max-n", "5", "--jobs", "1"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv[:-1] + ["2"], capsys)
    a, b = json.loads(a), json.loads(b)
    a.pop("duration"), b.pop("duration")
    assert a == b


def test_search(capsys):
    code, out, _ = run(["search", "--family", "C", "--max-n", "2"], capsys)
    assert code == 0 and json.loads(out)["counterexamples"] == []


def test_hasse_formats(capsys):
    code, out, _ = run(["hasse", "C2", "--json"], capsys)
    js = json.loads(out)
    assert code == 0 and len(js["nodes"]) == 4 and len(js["edges"]) == 3
    code, out, _ = run(["hasse", "D2", "--format", "dot", "--eta"], capsys)
    assert code == 0 and out.startswith("digraph")


def test_caps(capsys, monkeypatch):
    monkeypatch.setenv("ORBITCALC_MAX_N", "3")
    code, _, err = run(["hasse", "C2"], capsys)
    assert code == 2
    code, _, err = run(["verify", "--identity", "lemma41", "--max-n", "4"], capsys)
    assert code == 2 and "cap" in err
    monkeypatch.delenv("ORBITCALC_MAX_N")
    code, _, _ = run(["transpose", "[" + ",".join(["1"] * 31) + "]"], capsys)
    assert code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "orbitcalc", "transpose", "[3,1]"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["result"] == [2, 1, 1]
