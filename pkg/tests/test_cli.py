import csv
import io
import json

import pytest

from jaco.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_build_edgelist():
    assert run("build", "4") == (0, "4\n1 2\n2 3\n3 4\n")


def test_build_json_and_dot():
    code, text = run("build", "5", "--format", "json")
    assert code == 0 and json.loads(text)["arcs"][-1] == [4, 5]
    code, text = run("build", "3", "--format", "dot", "--directed")
    assert code == 0 and "v2 -> v3;" in text


def test_invariants_j8():
    code, text = run("invariants", "8", "--json")
    d = json.loads(text)
    values = {k: v["value"] for k, v in d["values"].items()}
    assert code == 0
    assert values == {"alpha": 3, "beta": 5, "chi": 4, "gamma": 2, "murtage": 2, "gamma_minus": 2}
    assert d["compact_sets"][0]["gamma_set"] == [2, 5]


def test_invariants_j1():
    code, text = run("invariants", "1", "--json")
    values = {k: v["value"] for k, v in json.loads(text)["values"].items()}
    assert code == 0
    assert (values["alpha"], values["chi"], values["gamma"], values["murtage"]) == (1, 1, 1, 0)


def test_invariants_table_view():
    code, text = run("invariants", "12", "--with-oracles")
    assert code == 0
    assert "prime Jaconian vertex" in text and "MISMATCH" not in text


def test_invariants_from_file(p5_file):
    code, text = run("invariants", "--edges", str(p5_file), "--json", "--with-bondage")
    d = json.loads(text)
    assert code == 0
    assert d["values"]["gamma"]["value"] == 2
    assert d["values"]["murtage"]["value"] == 2
    assert d["values"]["bondage"]["value"] == 1


def test_missing_file_is_usage_error(tmp_path):
    assert run("invariants", "--edges", str(tmp_path / "none.txt"))[0] == 2


def test_table_subcommand():
    code, text = run("paper-table")
    assert code == 0
    rows = [line.split() for line in text.splitlines()[1:14]]
    assert [int(r[3]) for r in rows] == [0, 0, 0, 1, 1, 2, 2, 2, 3, 3, 3, 1, 1]


def test_verify_bondage_disagrees_but_exits_zero():
    code, text = run("verify", "--checks", "bondage", "--from", "2", "--to", "6")
    assert code == 0
    assert any(line.startswith("DISAGREE") and "J_4" in line for line in text.splitlines())


@pytest.mark.parametrize("argv", [
    ("verify", "--from", "1", "--to", "3", "--checks", "nope"),
    ("verify", "--from", "5", "--to", "2"),
    ("build", "0"),
    ("export", "--from", "x", "--to", "3"),
    (),
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_export_csv():
    code, text = run("export", "--from", "1", "--to", "13")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0
    assert [int(r["murtage"]) for r in rows] == [0, 0, 0, 1, 1, 2, 2, 2, 3, 3, 3, 1, 1]
    assert all(r["bondage"] == "" for r in rows)


def test_export_alpha_non_decreasing():
    rows = list(csv.DictReader(io.StringIO(run("export", "--from", "1", "--to", "30")[1])))
    alphas = [int(r["alpha"]) for r in rows]
    assert alphas == sorted(alphas)


def test_export_json_to_file(tmp_path):
    path = tmp_path / "seq.json"
    code, _ = run("export", "--from", "1", "--to", "1", "--to-format", "json", "--out", str(path))
    assert code == 0
    assert json.loads(path.read_text()) == [
        {"n": 1, "alpha": 1, "beta": 0, "chi": 1, "gamma": 1, "murtage": 0, "bondage": None}]


def test_export_with_bondage():
    rows = list(csv.DictReader(io.StringIO(
        run("export", "--from", "1", "--to", "5", "--with-bondage")[1])))
    assert [r["bondage"] for r in rows] == ["", "1", "1", "2", "2"]


def test_output_is_deterministic():
    for argv in (("export", "--from", "1", "--to", "20"), ("paper-table", "--json")):
        assert run(*argv) == run(*argv)
