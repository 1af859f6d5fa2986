import json

from symtwist.cli import main


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


FORM1 = {"rank": 1, "gram": [["1"]]}
SIGN_REP = {
    "group": {"degree": 2, "generators": {"g": "(1 2)"}},
    "images": {"g": [["-1"]]},
}


def test_invariants_table(tmp_path, capsys):
    path = write(tmp_path, "f.json", {"rank": 2, "gram": [["-1", "0"], ["0", "-1"]]})
    assert main(["invariants", path]) == 0
    out = capsys.readouterr().out
    assert "inf" in out and "2" in out


def test_invariants_json(tmp_path, capsys):
    path = write(tmp_path, "f.json", FORM1)
    assert main(["invariants", path, "--format", "json"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["rank"] == 1 and rec["w1"] == 1


def test_invariants_bad_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert main(["invariants", str(path)]) == 2
    assert "error" in capsys.readouterr().err


def test_invariants_degenerate_form(tmp_path, capsys):
    path = write(tmp_path, "f.json", {"gram": [["1", "1"], ["1", "1"]]})
    assert main(["invariants", path]) == 2


def test_twist_sign_rep(tmp_path, capsys):
    f = write(tmp_path, "f.json", FORM1)
    r = write(tmp_path, "r.json", SIGN_REP)
    assert main(["twist", f, r, "sqrt5", "--format", "json"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["gram"] == [["5"]]
    assert rec["w1_product_formula"] is True


def test_twist_unknown_torsor(tmp_path, capsys):
    f = write(tmp_path, "f.json", FORM1)
    r = write(tmp_path, "r.json", SIGN_REP)
    assert main(["twist", f, r, "nope"]) == 2


def test_twist_group_mismatch(tmp_path, capsys):
    f = write(tmp_path, "f.json", FORM1)
    r = write(tmp_path, "r.json", SIGN_REP)
    assert main(["twist", f, r, "zeta5"]) == 2
    assert "mismatch" in capsys.readouterr().err


def strip_times(doc):
    for rep in doc["reports"]:
        rep.pop("seconds", None)
    return doc


def test_verify_suite_exit_code_and_determinism(tmp_path, capsys):
    assert main(["verify", "--suite", "arith", "--seed", "3", "--format", "json"]) == 0
    first = json.loads(capsys.readouterr().out)
    assert main(["verify", "--suite", "arith", "--seed", "3", "--format", "json"]) == 0
    second = json.loads(capsys.readouterr().out)
    # wall time aside, reports are identical run to run
    assert strip_times(first) == strip_times(second)
    assert first["passed"] is True


def test_verify_unknown_suite(capsys):
    assert main(["verify", "--suite", "bogus"]) == 2
