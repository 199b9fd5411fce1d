import json

import pytest

from catv.cli import run

from conftest import FIXTURES


def _run(capsys, *argv):
    code = run([str(a) for a in argv])
    return code, capsys.readouterr().out


def test_partition(capsys):
    code, out = _run(capsys, "partition", "F(x,y,y) -> G(x,x,y)")
    assert code == 0
    assert out == "{1,4,5} {2,3,6}\n"


def test_partition_json(capsys):
    code, out = _run(capsys, "--json", "partition", "F(a,b,a) -> G(b)")
    assert code == 0
    assert json.loads(out) == {"classes": [[1, 3], [2, 4]], "rendered": "{1,3} {2,4}"}


def test_end_of_s3(capsys):
    code, out = _run(capsys, "end", FIXTURES / "s3hom.catv", "--functor", "Hom", "--span", "Diag")
    assert code == 0
    assert out == "size=1\n(e)\n"


def test_end_with_oracle(capsys):
    code, out = _run(capsys, "--json", "end", FIXTURES / "z4.catv", "--functor", "Hom", "--span", "Diag", "--oracle")
    assert code == 0
    payload = json.loads(out)
    assert payload["size"] == 4
    assert payload["oracle"] == {"size": 4, "agrees": True}


def test_coend_of_s3(capsys):
    code, out = _run(capsys, "coend", FIXTURES / "s3hom.catv", "--functor", "Hom", "--span", "Diag", "--oracle")
    assert code == 0
    assert out.startswith("size=3\n")
    assert "oracle size=3 agrees" in out


def test_factor_in_s4(capsys):
    code, out = _run(capsys, "factor", FIXTURES / "s4.catv", "--variance", "V", "--mor", "(1234)")
    assert code == 0
    lines = out.splitlines()
    assert "f^e = (1234)" in lines
    assert "f_s = *" in lines
    assert "f_t = *" in lines


def test_factor_int(capsys):
    code, out = _run(capsys, "--json", "factor-int", "360", "--primes", "3,5")
    assert code == 0
    assert json.loads(out) == {"n": 360, "primes": [3, 5], "e": 45, "m": 8}


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("*.catv")), ids=lambda p: p.stem)
def test_check_fixtures(capsys, path):
    code, out = _run(capsys, "check", path)
    assert code == 0
    assert "✅ ok" in out


def test_check_json(capsys):
    code, out = _run(capsys, "--json", "check", FIXTURES / "two.catv")
    payload = json.loads(out)
    assert code == 0
    assert payload["ok"] is True
    assert "transformations" in payload["summary"]


def test_natural_writes_dot(capsys, tmp_path):
    dot = tmp_path / "alpha.dot"
    code, out = _run(capsys, "natural", FIXTURES / "two.catv", "--trans", "alpha", "--dot", dot)
    assert code == 0
    assert dot.read_text(encoding="utf-8").startswith("digraph")


def test_natural_single_class_generators(capsys):
    code, _ = _run(capsys, "natural", FIXTURES / "extranatural.catv", "--trans", "unit", "--generators", "single-class")
    assert code == 0


def test_single_class_needs_partition_span(capsys):
    code, _ = _run(capsys, "natural", FIXTURES / "two.catv", "--trans", "alpha", "--generators", "single-class")
    assert code == 2


def test_comma_of_alpha(capsys):
    code, out = _run(capsys, "comma", FIXTURES / "two.catv", "--trans", "alpha")
    assert code == 0
    assert "section " in out


def test_enumerate_variances(capsys):
    code, out = _run(capsys, "enumerate-variances", FIXTURES / "z4.catv", "--category", "Z4")
    assert code == 0
    assert out.splitlines()[-1] == "2 variance(s) on Z4"


def test_missing_file_is_an_input_error(capsys, tmp_path):
    code, _ = _run(capsys, "check", tmp_path / "absent.catv")
    assert code == 2


def test_unknown_name_is_an_input_error(capsys):
    code, _ = _run(capsys, "end", FIXTURES / "s3hom.catv", "--functor", "Nope", "--span", "Diag")
    assert code == 2


def test_error_as_json(capsys):
    code, out = _run(capsys, "--json", "factor", FIXTURES / "s4.catv", "--variance", "V")
    assert code == 2
    assert json.loads(out)["kind"] == "DSLSemanticError"


def test_fubini_needs_two_spans(capsys):
    code, _ = _run(capsys, "fubini", FIXTURES / "s3hom.catv", "--functor", "Hom", "--span", "Id")
    assert code == 2


def test_no_command_prints_examples(capsys):
    code, out = _run(capsys)
    assert code == 2
    assert "catv check" in out


def test_check_fails_with_witness(capsys):
    code, out = _run(capsys, "check", FIXTURES / "failing" / "nonnatural.catv")
    assert code == 1
    assert "transformation t: naturality ('u',)" in out
    assert "❌ failed" in out


def test_natural_fails_with_witness(capsys):
    code, out = _run(capsys, "--json", "natural", FIXTURES / "failing" / "nonnatural.catv", "--trans", "t")
    payload = json.loads(out)
    assert code == 1
    assert payload["ok"] is False
    assert [v["witness"] for v in payload["violations"]] == [["u"]]


def test_cap_flag_is_enforced(capsys):
    code, _ = _run(capsys, "--cap", "10", "end", FIXTURES / "s3hom.catv", "--functor", "Hom", "--span", "Diag")
    assert code == 2
    code, out = _run(capsys, "end", FIXTURES / "s3hom.catv", "--functor", "Hom", "--span", "Diag")
    assert code == 0
    assert out.startswith("size=1")


def test_env_cap_is_enforced(capsys, monkeypatch):
    monkeypatch.setenv("CATV_CAP", "10")
    code, _ = _run(capsys, "check", FIXTURES / "z4.catv")
    assert code == 2
    code, _ = _run(capsys, "--cap", "100", "check", FIXTURES / "z4.catv")
    assert code == 0


def test_bad_env_cap_is_an_input_error(capsys, monkeypatch):
    monkeypatch.setenv("CATV_CAP", "many")
    code, _ = _run(capsys, "check", FIXTURES / "two.catv")
    assert code == 2
