# tests/test_main.py

import json
import os

import pytest

from coloring_io import load_coloring, save_coloring
from host_model import Coloring, PartiteShape
from main import EXIT_BUDGET, EXIT_NO_WITNESS, EXIT_OK, EXIT_PATTERN, EXIT_USAGE, main


@pytest.fixture(autouse=True)
def single_worker(monkeypatch):
    monkeypatch.delenv("RAMSEY_THREADS", raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_formula(capsys):
    assert run(capsys, "formula", "--j", "5", "--n", "10") == (EXIT_OK, "5 (general-formula)\n")
    assert run(capsys, "formula", "--j", "2", "--n", "7") == (EXIT_OK, "infinite\n")


def test_formula_ambiguous_cell(capsys):
    code, out = run(capsys, "formula", "--j", "3", "--n", "4")
    assert code == EXIT_OK and out.startswith("3 (") and "[paper-ambiguous]" in out
    assert run(capsys, "formula", "--j", "3", "--n", "4", "--strict") == (EXIT_OK, "paper-ambiguous\n")


def test_formula_outside_domain(capsys):
    assert main(["formula", "--j", "1", "--n", "3"]) == EXIT_USAGE
    assert "❌" in capsys.readouterr().err


def test_missing_argument_is_a_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["formula", "--j", "5"])
    assert info.value.code == EXIT_USAGE


def test_table(capsys):
    code, out = run(capsys, "table", "--j-max", "6", "--n-max", "6")
    lines = out.splitlines()
    assert code == EXIT_OK
    assert len(lines) == 6
    assert all(len(line.split("\t")) == 6 for line in lines)
    code, out = run(capsys, "table", "--j-max", "4", "--n-max", "3", "--format", "json")
    assert len(json.loads(out)["cells"]) == 6


def test_construct_and_verify(capsys, tmp_path):
    code, out = run(capsys, "construct", "--j", "5", "--n", "4", "--out", str(tmp_path))
    assert code == EXIT_OK and "verified good" in out
    json_path = tmp_path / "coloring_j5_n4.json"
    g6_path = tmp_path / "coloring_j5_n4.g6"
    assert os.path.exists(tmp_path / "coloring_j5_n4.shape.json")
    assert load_coloring(str(json_path)) == load_coloring(str(g6_path))

    code, out = run(capsys, "verify", str(json_path), "--n", "4")
    assert code == EXIT_OK and out.rstrip().endswith("good")
    code, out = run(capsys, "verify", str(g6_path), "--n", "3")
    assert code == EXIT_PATTERN and "stripe" in out


def test_construct_value_one(capsys, tmp_path):
    assert main(["construct", "--j", "8", "--n", "2", "--out", str(tmp_path)]) == EXIT_NO_WITNESS
    assert not os.listdir(tmp_path)


def test_verify_bad_colorings(capsys, tmp_path):
    save_coloring(Coloring.all_blue(PartiteShape.uniform(7, 1)), str(tmp_path), "blue_k7")
    code, out = run(capsys, "verify", str(tmp_path / "blue_k7.json"), "--n", "2")
    assert code == EXIT_PATTERN and "cycle" in out
    assert "p0s0" in out

    truncated = tmp_path / "truncated.json"
    truncated.write_text('{"shape": {"parts": [1, 1')
    assert main(["verify", str(truncated), "--n", "2"]) == EXIT_USAGE


def test_certify_and_validate(capsys, tmp_path):
    path = tmp_path / "cert_5_20.json"
    assert main(["certify", "--j", "5", "--n", "20", "--out", str(path)]) == EXIT_OK
    capsys.readouterr()
    assert run(capsys, "validate", str(path)) == (EXIT_OK, "valid\n")

    data = json.loads(path.read_text())
    data["claimed_value"] = 8
    path.write_text(json.dumps(data))
    code, out = run(capsys, "validate", str(path))
    assert code == EXIT_PATTERN and "claimed value" in out


def test_certify_errors(capsys):
    assert main(["certify", "--j", "2", "--n", "3"]) == EXIT_USAGE
    assert main(["certify", "--j", "3", "--n", "2"]) == EXIT_PATTERN
    assert main(["certify", "--j", "5", "--n", "20", "--budget", "-1"]) == EXIT_USAGE


def test_search(capsys, tmp_path):
    code, out = run(capsys, "search", "--parts", "1", "1", "1", "1", "1", "--n", "2")
    assert code == EXIT_OK and out.startswith("good-coloring")
    code, out = run(capsys, "search", "--j", "6", "--t", "1", "--n", "2", "--L", "5",
                    "--symmetry", "lex_leader", "--dominance")
    assert code == EXIT_PATTERN and out.startswith("exhausted")
    assert json.loads(out[out.index("{"):])["nodes_explored"] >= 1
    assert main(["search", "--j", "8", "--t", "1", "--n", "2", "--node-budget", "50"]) == EXIT_BUDGET
    assert main(["search", "--j", "3", "--n", "2"]) == EXIT_USAGE


@pytest.mark.parametrize("flag, value", [
    ("--workers", "0"),
    ("--node-budget", "0"),
    ("--time-budget", "-1"),
])
def test_search_rejects_invalid_options(capsys, flag, value):
    assert main(["search", "--j", "5", "--t", "1", "--n", "2", flag, value]) == EXIT_USAGE
    assert "must be" in capsys.readouterr().err


def test_export_cnf(capsys, tmp_path):
    path = tmp_path / "k22.cnf"
    code, out = run(capsys, "export-cnf", "--parts", "2", "2", "--n", "2", "--L", "4",
                    "--out", str(path), "--solve")
    assert code == EXIT_OK
    assert "4 variables, 1 cycle clauses, 2 stripe clauses" in out
    assert out.splitlines()[-1] == "satisfiable"
    assert os.path.exists(f"{path}.map.json")


def test_host_limits_from_config_file(capsys, tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"limits": {"max_vertices": 9}}))
    save_coloring(Coloring.all_blue(PartiteShape.uniform(5, 2)), str(tmp_path), "blue_k5x2")
    for argv in (["construct", "--j", "5", "--n", "4", "--out", str(tmp_path)],
                 ["verify", str(tmp_path / "blue_k5x2.json"), "--n", "4"],
                 ["verify", str(tmp_path / "blue_k5x2.g6"), "--n", "4"],
                 ["export-cnf", "--j", "5", "--t", "2", "--n", "2", "--out", str(tmp_path / "k.cnf")]):
        assert main(["--config", str(config), *argv]) == EXIT_USAGE
        assert "cap is 9" in capsys.readouterr().err
    assert load_coloring(str(tmp_path / "blue_k5x2.json")).shape == PartiteShape.uniform(5, 2)


def test_config_file(capsys, tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"search": {"node_budget": 50}}))
    assert main(["--config", str(config), "search", "--j", "8", "--t", "1", "--n", "2"]) == EXIT_BUDGET
