import json

import pytest

from picard3.cli import main


def run_cli(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_wehler_text(capsys, monkeypatch):
    monkeypatch.setenv("PICARD3_NO_COLOR", "1")
    code, out, _ = run_cli(capsys, "analyze", "--n", "2")
    assert code == 0
    assert "C2 * C2 * C2" in out
    assert "M_2" in out


def test_analyze_g8_json(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--k", "8", "--l", "-8",
                           "--format", "json")
    assert code == 0
    j = json.loads(out)
    assert j["schema"] == "picard3-aut/1"
    assert j["congruence"]["index_in_Pi"] == 192
    assert j["congruence"]["free_rank"] == 17


def test_analyze_invalid_exits_1(capsys):
    code, _, err = run_cli(capsys, "analyze", "--k", "0", "--l", "1")
    assert code == 1
    assert "error" in err


def test_analyze_hypotheses_not_met_exits_2(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--k", "5", "--l", "1")
    assert code == 2
    assert "HYPOTHESES NOT MET" in out


def test_analyze_text_and_json_agree(capsys):
    code, out_j, _ = run_cli(capsys, "analyze", "--n", "8", "--format", "json")
    j = json.loads(out_j)
    code2, out_t, _ = run_cli(capsys, "analyze", "--n", "8")
    assert code == code2 == 0
    c = j["congruence"]
    assert f"[Pi : G_8] = {c['index_in_Pi']}" in out_t
    assert f"delta = {c['delta_n']}" in out_t
    assert f"free rank (if torsion-free): {c['free_rank']}" in out_t


def test_usage_error_exits_1(capsys):
    code, _, _ = run_cli(capsys, "analyze")
    assert code == 1
    code, _, _ = run_cli(capsys, "nonsense")
    assert code == 1


def test_salem(capsys):
    code, out, _ = run_cli(capsys, "salem", "--matrix", "1,2,4,9")
    assert code == 0 and "A = 98" in out and "Salem" in out
    code, out, _ = run_cli(capsys, "salem", "--matrix", "1,0,0,1")
    assert code == 0 and "not Salem" in out
    code, _, err = run_cli(capsys, "salem", "--matrix", "1,2,2,9")
    assert code == 2 and "det" in err
    code, _, err = run_cli(capsys, "salem", "--matrix", "1,2,3")
    assert code == 1


def test_salem_json(capsys):
    code, out, _ = run_cli(capsys, "salem", "--matrix", "1,2,4,9",
                           "--format", "json")
    j = json.loads(out)
    assert j["A"] == 98 and j["is_salem"] and j["symplectic"]
    assert j["cubic"] == [1, -99, 99, -1]


def test_congruence(capsys):
    code, out, _ = run_cli(capsys, "congruence", "--n", "8",
                           "--format", "json")
    assert code == 0
    j = json.loads(out)
    assert j["subgroup"] == {"kind": "G_n", "n": 8}
    assert j["index_in_Pi"] == 192
    assert j["delta_n"] == 2
    assert j["free_rank"] == 17
    assert j["torsion_bounded_search"]["found_count"] == 0
    code, out, _ = run_cli(capsys, "congruence", "--n", "2")
    assert code == 0 and "not free" in out


def test_congruence_text_and_json_agree(capsys):
    _, out_j, _ = run_cli(capsys, "congruence", "--n", "8", "--format", "json")
    j = json.loads(out_j)
    _, out_t, _ = run_cli(capsys, "congruence", "--n", "8")
    assert f"[Pi : G_8] = {j['index_in_Pi']}" in out_t
    assert f"delta_8 = {j['delta_n']}" in out_t
    assert f"free rank (if torsion-free): {j['free_rank']}" in out_t
    assert f"entries <= {j['torsion_bounded_search']['bound']}" in out_t


def test_verify_deterministic(capsys):
    args = ("verify", "--suite", "clifford", "--trials", "3", "--seed", "7",
            "--format", "json")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    j = json.loads(out1)
    assert j["ok"] and j["suites"][0]["failed"] == 0


def test_verify_suite_filter(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "exterior",
                           "--trials", "2", "--seed", "1")
    assert code == 0
    assert "suite exterior" in out
    assert "clifford" not in out


def test_verify_all_suites(capsys):
    code, out, _ = run_cli(capsys, "verify", "--trials", "2", "--seed", "5")
    assert code == 0
    for name in ("clifford", "exterior", "roundtrip"):
        assert f"suite {name}" in out
