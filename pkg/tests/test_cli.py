import json

import pytest

from atomon.cli import main
from atomon.fixtures import c2, h2, one, zero
from atomon.serialize import monoid_to_json


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, m in (("one", one()), ("c2", c2()), ("h2", h2()), ("zero", zero())):
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(monoid_to_json(m)))
        paths[name] = str(p)
    fam = tmp_path / "fam.json"
    fam.write_text(json.dumps({"members": ["one.json", "c2.json"]}))
    paths["fam"] = str(fam)
    hom = tmp_path / "id_one.json"
    hom.write_text(json.dumps({"source": "one.json", "target": "one.json", "map": [0, 1, 2]}))
    paths["id_one"] = str(hom)
    fold = tmp_path / "fold.json"
    fold.write_text(json.dumps({"source": "h2.json", "target": "one.json", "map": [0, 1, 1, 2]}))
    paths["fold"] = str(fold)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"names": ["1", "x"], "identity": 0, "table": [[0, 1], [1, 7]]}))
    paths["bad"] = str(bad)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_validate(files, capsys):
    code, out = run(capsys, "validate", files["one"])
    assert code == 0 and "valid monoid" in out
    code = main(["validate", files["bad"]])
    assert code == 1


def test_analyze(files, capsys):
    code, out = run(capsys, "analyze", files["one"])
    assert code == 0
    assert "atoms: a" in out
    assert "atomic=yes" in out
    assert "(2 + {0} mod 1)" in out


def test_analyze_json_deterministic(files, capsys):
    _, first = run(capsys, "analyze", files["one"], "--json")
    _, second = run(capsys, "analyze", files["one"], "--json")
    assert first == second
    payload = json.loads(first)
    assert payload["atoms"] == ["a"]
    assert payload["properties"]["atomic"] is True


def test_lengthset(files, capsys):
    code, out = run(capsys, "lengthset", files["one"], "0", "--bound", "8")
    assert code == 0
    assert out.splitlines() == ["(2 + {0} mod 1)", "oracle on [0,8]: agrees"]
    code, out = run(capsys, "lengthset", files["one"], "1")
    assert out.strip() == "{0}"


def test_unions(files, capsys):
    code, out = run(capsys, "unions", files["one"], "3")
    assert code == 0 and out.strip() == "(2 + {0} mod 1)"
    code, out = run(capsys, "unions", files["one"], "0")
    assert out.strip() == "{0}"


def test_coproduct_commands(files, capsys):
    code, out = run(capsys, "coproduct", "reduce", files["fam"], "(a@0)*(1@0)*(a@0)")
    assert code == 0 and out.strip() == "(0@0)"
    code, out = run(capsys, "coproduct", "mul", files["fam"], "(u@1)", "(u@1)")
    assert out.strip() == "eps"
    code, out = run(capsys, "coproduct", "atom", files["fam"], "(u@1)*(a@0)")
    assert "atom: yes" in out
    code, out = run(capsys, "coproduct", "lengthset", files["fam"], "(0@0)*(u@1)*(a@0)", "--bound", "8")
    assert "(3 + {0} mod 1)" in out and "agrees" in out
    code, out = run(capsys, "coproduct", "unionk", files["fam"], "2")
    assert code == 0
    code, out = run(capsys, "coproduct", "system", files["fam"], "2")
    assert "truncated at 2 blocks" in out


def test_product_commands(files, capsys):
    code, out = run(capsys, "product", "contains", files["fam"], "(0,1)")
    assert out.strip() == "no"
    code, out = run(capsys, "product", "contains", files["fam"], "(1,u)")
    assert out.strip() == "yes"
    code, out = run(capsys, "product", "system", files["fam"])
    assert code == 0
    code, out = run(capsys, "product", "unionk", files["fam"], "0")
    assert out.strip() == "{0}"
    code, out = run(capsys, "product", "materialize", files["fam"], "--json")
    payload = json.loads(out)
    assert len(payload["names"]) == 2  # only the unit tuples exist here


def test_limits_commands(files, capsys):
    code, out = run(capsys, "limits", "terminal")
    assert code == 0 and "terminal: 3 elements" in out
    code, out = run(capsys, "limits", "initial", "--json")
    assert json.loads(out)["monoid"]["names"] == ["1"]
    code, out = run(capsys, "limits", "equalizer", files["fold"], files["fold"])
    assert "equalizer: 4 elements" in out
    code, out = run(capsys, "limits", "coequalizer", files["fold"], files["fold"])
    assert "coequalizer: 3 elements" in out
    code, out = run(capsys, "limits", "pullback", files["fold"], files["id_one"])
    assert "pullback: 4 elements" in out
    code, out = run(capsys, "limits", "pushout-present", files["id_one"], files["id_one"])
    assert "(a@0) = (a@1)" in out
    code, out = run(
        capsys, "limits", "pushout-eq", files["id_one"], files["id_one"], "(a@0)", "(a@1)",
        "--depth", "1",
    )
    assert out.strip() == "equal"


def test_verify_command(files, capsys):
    code, out = run(capsys, "verify", "--suite", "length-oracle")
    assert code == 0
    assert out.strip() == "suite length-oracle: 70 cases, ok"
    code, _ = run(capsys, "verify", "--suite", "nope")
    assert code == 1


def test_verify_output_is_deterministic(capsys):
    _, first = run(capsys, "verify", "--suite", "epset-arithmetic", "--seed", "3")
    _, second = run(capsys, "verify", "--suite", "epset-arithmetic", "--seed", "3")
    assert first == second


def test_budget_env_caps_oracle(files, capsys, monkeypatch):
    monkeypatch.setenv("ATOMON_BUDGET", "3")
    code = main(["coproduct", "lengthset", files["fam"], "(0@0)*(u@1)*(a@0)", "--bound", "8"])
    assert code == 1  # refused: search budget exhausted
