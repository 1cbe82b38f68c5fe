"""The egc command line: output formats, exit codes, list parsing."""

import json

import pytest

from egc.cli import RunConfig, main, parse_ints, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_helpers():
    assert parse_ints("") == ()
    assert parse_ints("3,-1,0") == (3, -1, 0)
    assert parse_range("-2:3") == (-2, 3)


def test_run_config_validation():
    RunConfig()
    with pytest.raises(ValueError):
        RunConfig(prime=91)
    with pytest.raises(ValueError):
        RunConfig(trials=0)
    with pytest.raises(ValueError):
        RunConfig(window=(3, -3))


def test_j_text(capsys):
    code, out, _ = run(capsys, "j", "--lambda", "2", "--phi", "1",
                       "--rho", "1")
    assert code == 0
    assert "β(y1⊖y2)" in out


def test_j_structural_zero(capsys):
    code, out, _ = run(capsys, "j", "--lambda", "1", "--phi", "0",
                       "--rho", "")
    assert code == 2
    assert "= 0" in out


def test_j_json_metadata(capsys):
    code, out, _ = run(capsys, "j", "--lambda", "7,4,2,2,1",
                       "--phi", "-1,0,1,2,4", "--rho", "5,4,2,1,1",
                       "--format", "json")
    payload = json.loads(out)
    assert payload["nu"] == [7, 4, 2, 1, 1]
    assert payload["normalization_beta_exp"] == 3
    assert payload["q"] == 2


def test_j_incompatible_flag(capsys):
    code, _, err = run(capsys, "j", "--lambda", "1,1", "--phi", "1,5",
                       "--rho", "1")
    assert code == 1 and "compatible" in err


def test_j_json_roundtrip_matches_text(capsys):
    code, text_out, _ = run(capsys, "j", "--lambda", "1,1",
                            "--phi", "-2,-1", "--rho", "1")
    assert code == 0 and "β(y-1⊖y0)" in text_out
    code, json_out, _ = run(capsys, "j", "--lambda", "1,1",
                            "--phi", "-2,-1", "--rho", "1",
                            "--format", "json")
    payload = json.loads(json_out)
    assert payload["monomials"] == [{"factors": [[-1, 0]], "mult": 1}]


def test_perm_oneline(capsys):
    code, out, _ = run(capsys, "perm", "--oneline", "3,4,5,1,6,2",
                       "--base", "1")
    assert code == 0
    assert "vexillary: True" in out
    assert "shape: [2, 2, 2, 1]" in out
    assert "flag: [3, 3, 3, 5]" in out


def test_perm_word_non_vexillary(capsys):
    code, out, _ = run(capsys, "perm", "--word", "1,2,-1,0")
    assert code == 0 and "vexillary: False" in out


def test_perm_empty_word_is_identity(capsys):
    code, out, _ = run(capsys, "perm", "--word", "")
    assert code == 0 and "identity" in out


def test_perm_malformed(capsys):
    code, _, err = run(capsys, "perm", "--oneline", "1,1")
    assert code == 1 and err


def test_tableaux_enumeration(capsys):
    code, out, err = run(capsys, "tableaux", "--lambda", "1,1", "--mu", "1",
                         "--flag", "1,2", "--sign", "positive",
                         "--window", "1:2")
    assert code == 0
    assert out.splitlines() == [". ; {1}", ". ; {1,2}", ". ; {2}"]
    assert "3 tableaux" in err


def test_verify_pass_and_format(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "pi", "--seed", "42",
                       "--trials", "2", "--max-size", "2")
    assert code == 0 and "pi: pass" in out
    code, out, _ = run(capsys, "verify", "--suite", "ring",
                       "--format", "json")
    report = json.loads(out)
    assert report["ok"] is True and report["suite"] == "ring"


def test_verify_same_seed_same_bytes(capsys):
    args = ("verify", "--suite", "theorem", "--seed", "7", "--trials", "1",
            "--max-size", "2", "--flag-range", "-1:1", "--format", "json")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
