import json

import pytest

from hermitepw.cli import main
from hermitepw.maya import MayaDiagram
from hermitepw.polys import IntPoly, RatFunc


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_pw_text(capsys):
    code, out = run(capsys, "pw", "--frobenius", "5,2|")
    assert code == 0
    assert out == "H[(5,2 | )] = -384x^6 - 960x^4 - 480x^2 - 240\n"


def test_pw_json_round_trip(capsys):
    code, out = run(capsys, "--format", "json", "pw", "--partition", "2,2,1,1")
    assert code == 0
    blob = json.loads(out)
    poly = IntPoly.from_json(blob["poly"])
    assert poly.degree == blob["degree"] == 6
    assert MayaDiagram.parse(blob["frobenius"]).t == (5, 4, 2, 1)


def test_equiv_json(capsys):
    code, out = run(capsys, "--format", "json", "equiv",
                    "--partition", "4,4,3,1,1", "--k", "6")
    assert code == 0
    blob = json.loads(out)
    assert blob == {"M": "( | 8,7,5,2,1)", "constant": "-483840", "k": 6,
                    "lhs_degree": 13, "match": True}


def test_equiv_accepts_frobenius_and_shift(capsys):
    code, out = run(capsys, "--format", "json", "equiv",
                    "--frobenius", "|8,7,5,2,1", "--k", "3")
    assert code == 0
    assert json.loads(out)["constant"] == "-1935360"


def test_maya_subcommand(capsys):
    code, out = run(capsys, "--format", "json", "maya", "--frobenius", "5,2,1|2,1")
    assert code == 0
    blob = json.loads(out)
    assert blob["partition"] == [4, 4, 3, 1, 1]
    assert blob["girth"] == 5
    assert blob["standard_frobenius"] == "( | 8,7,5,2,1)"
    assert blob["standard_shift"] == -6
    assert blob["conjugate"] == [5, 3, 3, 2]


def test_minorder_subcommand(capsys):
    code, out = run(capsys, "--format", "json", "minorder", "--partition", "4,4,1,1")
    assert code == 0
    blob = json.loads(out)
    assert blob["r"] == 3 and blob["origins"] == [3]
    assert blob["minimal_frobenius"] == "(2 | 4,3)"
    assert blob["durfee"] == {"mu": [2], "nu": [3, 3], "p": 1, "q": 2}


def test_xhermite_subcommand(capsys):
    code, out = run(capsys, "--format", "json", "xhermite", "--partition", "2,2,1,1",
                    "--n", "9", "--min-order", "--verify-ode")
    assert code == 0
    blob = json.loads(out)
    assert blob["min_order"]["order"] == 3
    assert blob["min_order"]["origin"] == 6
    assert blob["min_order"]["consistent"] is True
    assert blob["eigen"] == {"n": 9, "eigenvalue": "-6", "N": "6",
                             "residual_zero": True}


def test_piv_solve(capsys):
    code, out = run(capsys, "--format", "json", "piv", "--class", "gh",
                    "--m", "2", "--ell", "4", "--branch", "1", "--verify")
    assert code == 0
    blob = json.loads(out)
    assert blob["a"] == "-11" and blob["b"] == "-8" and blob["verified"] is True
    y = RatFunc.from_json(blob["y"])
    assert not y.is_zero()


def test_piv_o_solve(capsys):
    code, out = run(capsys, "--format", "json", "piv", "--class", "o",
                    "--l1", "1", "--l2", "2", "--branch", "2", "--verify")
    assert code == 0
    blob = json.loads(out)
    assert blob["a"] == "-1" and blob["b"] == "-128/9" and blob["verified"] is True


def test_piv_catalog(capsys):
    code, out = run(capsys, "--format", "json", "piv", "catalog", "--max", "1")
    assert code == 0
    entries = json.loads(out)
    assert entries and all(e["verified"] for e in entries)


def test_selftest(capsys):
    code, out = run(capsys, "selftest")
    assert code == 0
    assert "FAIL" not in out and "PASS" in out


def test_deterministic_output(capsys):
    _, out1 = run(capsys, "--format", "json", "piv", "catalog", "--max", "1")
    _, out2 = run(capsys, "--format", "json", "piv", "catalog", "--max", "1")
    assert out1 == out2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["equiv", "--partition", "2,1"])   # missing required --k
    assert exc.value.code == 2


def test_unknown_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_cache_env_round_trip(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("HERMITEPW_CACHE_DIR", str(tmp_path))
    code, _ = run(capsys, "pw", "--partition", "2,2,1,1")
    assert code == 0
    assert (tmp_path / "hermite_tables.json").exists()
    code, _ = run(capsys, "pw", "--partition", "2,2,1,1")
    assert code == 0
