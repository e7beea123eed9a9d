import json

import pytest

from valgebras.algebra import builtin
from valgebras.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--json", *argv)
    assert code == 0, err
    return json.loads(out)


def test_classify_type_i(capsys):
    rep = run_json(capsys, "classify", "1,-1,-1,-1,1,1")
    assert rep["command"] == "classify"
    assert rep["results"]["lie_admissible_type"] == "I"
    assert rep["results"]["dim_F_v"] == 1
    assert set(rep) == {"command", "inputs", "results", "paper_anchors"}


def test_classify_pre_lie(capsys):
    rep = run_json(capsys, "classify", "1,0,0,-1,0,0")
    assert rep["results"]["lie_admissible_type"] == "III_1(t=0)"
    assert rep["results"]["decomposition"] == {"trivial": 0, "sign": 1, "standard": 1}


def test_classify_separate_tokens(capsys):
    rep = run_json(capsys, "classify", "2", "1", "1", "1", "1", "0")
    assert rep["results"]["power_associative_type"] == "V'"


def test_classify_errors(capsys):
    code, _, err = run(capsys, "classify", "0,0,0,0,0,0")
    assert code == 2 and "zero vector" in err
    code, _, err = run(capsys, "classify", "1,x,0,0,0,0")
    assert code == 2 and "'x'" in err
    code, _, _ = run(capsys, "classify", "1,2,3")
    assert code == 2


def test_inputs_round_trip(capsys):
    rep = run_json(capsys, "classify", "2/4,-6/3,0,1,1,1")
    echoed = rep["inputs"]["vector"]
    assert echoed == ["1/2", "-2", "0", "1", "1", "1"]
    again = run_json(capsys, "classify", ",".join(echoed))
    assert again == rep


def test_deterministic(capsys):
    a = run(capsys, "--json", "dual", "IV_2")
    b = run(capsys, "--json", "dual", "IV_2")
    assert a == b


def test_analyze(capsys):
    r = run_json(capsys, "analyze", "octonions")["results"]
    assert (r["annihilator_dim"], r["type"], r["alternative"], r["jacobi"]) == (5, "V'", True, False)
    r = run_json(capsys, "analyze", "mat2")["results"]
    assert (r["annihilator_dim"], r["type"]) == (6, "VI")
    r = run_json(capsys, "analyze", "sl2_commutator")["results"]
    assert r["jacobi"] and r["contains_V"]


def test_analyze_json_file(capsys, tmp_path):
    path = tmp_path / "sl2.json"
    path.write_text(json.dumps(builtin("sl2_commutator").to_json()))
    r = run_json(capsys, "analyze", str(path))["results"]
    assert r["jacobi"]


def test_analyze_errors(capsys, tmp_path):
    assert run(capsys, "analyze", "nonesuch")[0] == 3
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "entries": [{"i": 5, "j": 1, "k": 1, "c": "1"}]}')
    assert run(capsys, "analyze", str(bad))[0] == 2
    bad.write_text("{")
    assert run(capsys, "analyze", str(bad))[0] == 2
    assert run(capsys, "analyze", str(tmp_path / "missing.json"))[0] == 2


def test_dual_vector(capsys):
    r = run_json(capsys, "dual", "--vector", "1,0,0,-1,0,0")["results"]
    assert r["type"] == "III_1(t=0)"
    assert r["matches_paper_table"] is True
    assert r["printed_relations"][0][0]["element"] == "(x1x2)x3 - (x1x3)x2"
    assert r["r_dim"] + r["r_perp_dim"] == 12


def test_dual_flags_discrepancy(capsys):
    r = run_json(capsys, "dual", "III_3")["results"]
    assert r["matches_paper_table"] is True
    assert r["discrepancies"]


def test_dual_unknown_type(capsys):
    assert run(capsys, "dual", "IV_9")[0] == 3
    assert run(capsys, "dual")[0] == 2


def test_dual_unclassified_vector(capsys):
    r = run_json(capsys, "dual", "--vector", "1,-1,2,-1,1,-2")["results"]
    assert r["type"] == "unclassified"
    assert r["matches_paper_table"] is None


def test_tensor(capsys):
    r = run_json(capsys, "tensor", "octonions", "octonions")["results"]
    assert r["dim"] == 64
    assert not r["contains_V"] and not r["contains_W"]
    r = run_json(capsys, "tensor", "prelie", "prelie")["results"]
    assert r["annihilator_dim"] == 0
    r = run_json(capsys, "tensor", "quaternions", "mat2", "--emit-product")["results"]
    assert r["annihilator_dim"] == 6 and r["product"]["dim"] == 16


def test_vw(capsys):
    r = run_json(capsys, "vw-check", "1,0,0,-1,0,0", "1,-1,0,0,0,0")["results"]
    assert r["witness_found"]
    assert r["u_prime"] == ["1", "-1", "0", "1", "0", "-1"]
    r = run_json(capsys, "vw-check", "2,-1,-1,-1,1,0", "1,0,0,0,1,1", "--algebra", "prelie")["results"]
    assert not r["witness_found"]
    assert set(r["algebra"]) == {"star_left", "star_right", "starstar", "annihilator_contains_V"}


def test_text_output(capsys):
    code, out, _ = run(capsys, "classify", "1,-1,-1,-1,1,1")
    assert code == 0 and "lie_admissible_type" in out and "I" in out


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 11 and all(l.startswith("PASS") for l in lines)


def test_usage_error(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "--help")[0] == 0
