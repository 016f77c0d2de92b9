import json
import subprocess
import sys

import pytest

from radoreg.cli import CommandConfig, UsageError, main, parse_config, run
from radoreg.colorings import coloring_from_json
from radoreg.dimacs import parse_dimacs
from radoreg.equations import LinearEquation, make_Lk

from helpers import grid_solutions


def cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_equation_json(capsys):
    code, out, _ = cli(capsys, "equation", "--family", "L", "--k", "3", "--format", "json")
    assert code == 0
    assert out.strip() == '{"label":"L_3","arity":3,"coeffs":["-7/3","2","4/3"]}'
    assert LinearEquation.from_json(json.loads(out)) == make_Lk(3)


def test_equation_text_shows_both_forms(capsys):
    code, out, _ = cli(capsys, "equation", "--family", "M", "--k", "3")
    assert code == 0
    assert "x_0 + 2 x_1 = 4 x_2" in out
    assert "(1)*x_0 + (2)*x_1 + (-4)*x_2 = 0" in out


def test_verify_valuation_reports_oracle_count(capsys):
    code, out, _ = cli(capsys, "verify", "--family", "L", "--k", "3",
                       "--coloring", "valuation", "--max", "200")
    assert code == 0
    # count from the 2-variable scan of -7 x_0 + 6 x_1 + 4 x_2 = 0 over [1..200]
    assert out.strip() == "no monochromatic solution among 4651 examined"


def test_verify_count_small_matches_grid(capsys):
    code, out, _ = cli(capsys, "verify", "--family", "L", "--k", "3", "--max", "30",
                       "--format", "json")
    doc = json.loads(out)
    assert doc["examined"] == len(grid_solutions(make_Lk(3).coeffs, 30))


@pytest.mark.parametrize(
    "argv, expected_code",
    [
        (["search", "--family", "L", "--k", "3", "--colors", "2", "--max", "4"], 1),
        (["search", "--family", "L", "--k", "3", "--colors", "3", "--max", "4"], 0),
        (["search", "--family", "L", "--k", "6", "--colors", "5", "--max", "32", "--budget", "3"], 3),
        (["verify", "--family", "L", "--k", "3", "--coloring", "table", "--table", "0,0,0,0",
          "--max", "4"], 1),
        (["verify", "--family", "L", "--k", "3", "--coloring", "table", "--table", "0,1,0,2",
          "--max", "4"], 0),
        (["verify", "--family", "M", "--k", "3", "--height", "4"], 0),
        (["mincolors", "--family", "L", "--k", "4", "--max", "8"], 0),
        (["mincolors", "--family", "L", "--k", "6", "--max", "32", "--budget", "3"], 3),
        (["ratios", "--family", "L", "--k", "3"], 0),
        (["clique", "--family", "L", "--k", "3", "--max", "4"], 0),
        (["dimacs", "--family", "L", "--k", "3", "--colors", "2", "--max", "4"], 0),
        (["explain", "--family", "L", "--k", "3", "--values", "1,1,1"], 0),
        (["color", "--colors", "3", "8", "7/10"], 0),
        (["solutions", "--coeffs=-1,2", "--max", "4"], 0),
        (["equation", "--family", "L", "--k", "1"], 2),
        (["verify", "--family", "L", "--k", "3", "--p", "4", "--max", "4"], 2),
        (["equation", "--coeffs", "1,x"], 2),
        (["equation", "--family", "L", "--k", "3", "--coeffs", "1,2"], 2),
        (["equation"], 2),
        (["search", "--family", "L", "--k", "3", "--colors", "2", "--max", "4", "--budget", "0"], 2),
        (["color", "--colors", "3", "0"], 2),
    ],
)
def test_exit_code_matrix(capsys, argv, expected_code):
    code, _, _ = cli(capsys, *argv)
    assert code == expected_code


@pytest.mark.parametrize("argv", [["search", "--bogus"], ["nosuchcommand"], ["search", "--family", "Q"]])
def test_argparse_rejects_unknown(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_search_json_schema(capsys):
    code, out, _ = cli(capsys, "search", "--family", "L", "--k", "3", "--colors", "3",
                       "--max", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"status", "table", "nodes", "tuples"}
    assert doc["status"] == "sat" and doc["table"] == [0, 1, 0, 2] and doc["tuples"] == 3
    table = coloring_from_json({"kind": "table", "colors": 3, "table": doc["table"]})
    assert table.N == 4


def test_search_text_uses_verdict_words(capsys):
    _, out, _ = cli(capsys, "search", "--family", "L", "--k", "3", "--colors", "2", "--max", "4")
    assert out.strip() == "UNSAT"


def test_budget_json(capsys):
    code, out, _ = cli(capsys, "search", "--family", "L", "--k", "6", "--colors", "5",
                       "--max", "32", "--budget", "3", "--format", "json")
    assert code == 3 and json.loads(out)["status"] == "budget"


def test_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("RADOREG_BUDGET", "3")
    code, _, _ = cli(capsys, "search", "--family", "L", "--k", "6", "--colors", "5", "--max", "32")
    assert code == 3


def test_dimacs_output_file(tmp_path, capsys):
    target = tmp_path / "l3.cnf"
    code, _, _ = cli(capsys, "dimacs", "--family", "L", "--k", "3", "--colors", "3", "--max", "4",
                     "-o", str(target))
    assert code == 0
    nvars, clauses = parse_dimacs(target.read_text())
    assert (nvars, len(clauses)) == (12, 13)


def test_equation_and_coloring_files(tmp_path, capsys):
    eqf = tmp_path / "eq.json"
    eqf.write_text(json.dumps(make_Lk(3).to_json()))
    colf = tmp_path / "col.json"
    colf.write_text(json.dumps({"kind": "table", "colors": 3, "table": [0, 1, 0, 2]}))
    code, out, _ = cli(capsys, "verify", "--equation-file", str(eqf), "--coloring-file",
                       str(colf), "--max", "4", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"witness": "none_found", "domain": {"kind": "interval", "max": 4},
                               "examined": 3}


def test_mono_witness_json(capsys):
    code, out, _ = cli(capsys, "verify", "--family", "L", "--k", "3", "--coloring", "table",
                       "--table", "0,0,0,0", "--max", "4", "--format", "json")
    assert code == 1
    assert json.loads(out) == {"witness": "mono_solution", "assignment": ["2", "1", "2"], "color": 0}


def test_ratios_json(capsys):
    _, out, _ = cli(capsys, "ratios", "--family", "L", "--k", "3", "--format", "json")
    ratios = [r["ratio"] for r in json.loads(out)]
    assert ratios == ["1/4", "1/2", "7/10", "10/7", "2", "4"]


def test_explain_json(capsys):
    _, out, _ = cli(capsys, "explain", "--family", "L", "--k", "3", "--values", "2", "1", "2",
                    "--format", "json")
    doc = json.loads(out)
    assert doc["colors"] == [1, 0, 1] and [0, 1] in doc["collisions"]


def test_color_table_columns(capsys):
    _, out, _ = cli(capsys, "color", "--colors", "3", "8", "12", "7/10")
    assert out.splitlines() == ["value  color", "    8      0", "   12      2", " 7/10      2"]


def test_run_validates_config_directly():
    code, text = run(CommandConfig("equation"))
    assert code == 2 and "exactly one" in text
    code, _ = run(CommandConfig("search", family="L", k=3, colors=2, max=4, jobs=0))
    assert code == 2
    with pytest.raises(UsageError):
        CommandConfig("equation", family="L", k=3, budget=-1).validate()


def test_parse_config_splits_values():
    cfg = parse_config(["explain", "--family", "L", "--k", "3", "--values", "1,2", "3"])
    assert cfg.values == ["1", "2", "3"]


def test_deterministic_bytes():
    argv = [sys.executable, "-m", "radoreg", "search", "--family", "L", "--k", "5", "--colors", "5",
            "--max", "16", "--format", "json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and b'"status":"sat"' in first
