import io
import json
import subprocess
import sys

import pytest

from partalg.cli import main

PI = "1 2 2' 3 | 3' | 1' 4 4' | 5 5'"
GAMMA = "1 1' 2' | 2 4' | 3 | 4 | 5 5' 3'"


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_mul_example(capsys):
    code, obj = run_json(capsys, "mul", PI, GAMMA)
    assert code == 0
    assert obj["removed"] == 1
    assert sorted(map(sorted, obj["product"])) == sorted(map(sorted, [[1, 2, 3, -4], [4, -1, -2], [5, -3, -5]]))


def test_mul_json_operands(capsys):
    a = json.dumps({"k": 1, "blocks": [[1], [-1]]})
    code, obj = run_json(capsys, "mul", a, a)
    assert code == 0
    assert obj["removed"] == 1


def test_mul_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(PI + "\n" + GAMMA + "\n"))
    code, obj = run_json(capsys, "mul")
    assert code == 0 and obj["removed"] == 1


def test_mul_file(capsys, tmp_path):
    path = tmp_path / "pair.txt"
    path.write_text(PI + "\n" + GAMMA + "\n")
    code, obj = run_json(capsys, "mul", "--file", str(path))
    assert code == 0 and obj["removed"] == 1


def test_mul_text(capsys):
    code, out, _ = run(capsys, "mul", PI, GAMMA, "--format", "text")
    assert code == 0
    assert "4'" in out


@pytest.mark.parametrize("argv", [
    ["mul", "1 2 | x", "1 2"],
    ["mul", "1 1 | 1'", "1 1'"],
    ["mul", PI],
    ["blocks", "--k", "3", "--delta", "one"],
    ["paths", "--shape", "1,2", "--l", "0", "--level", "6"],
    ["jm", "L", "9", "--k", "2"],
])
def test_malformed_input(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.strip()


def test_diagnostic_names_token(capsys):
    code, _, err = run(capsys, "mul", "1 2 | x", "1 2")
    assert code == 2 and "'x'" in err


def test_verify(capsys):
    code, obj = run_json(capsys, "verify", "--level", "4", "--k", "2")
    assert code == 0 and obj["pass"] is True
    assert obj["results"] and all(e["pass"] for e in obj["results"])


def test_jm(capsys):
    code, obj = run_json(capsys, "jm", "L", "2", "--k", "2")
    assert code == 0
    assert obj["terms"] == [{"coeff": ["1"], "diagram": [[1], [2, -2], [-1]]}]


def test_ssp(capsys):
    assert run_json(capsys, "ssp", "q", "2", "--values", "1,2,3,4")[1]["value"] == "-10"
    assert run_json(capsys, "ssp", "l", "0", "--values", "1,2")[1]["value"] == "1"
    code, obj = run_json(capsys, "ssp", "l", "1", "--at-jm", "--r", "2", "--k", "1")
    assert code == 0 and obj["k"] == 1


def test_center(capsys):
    code, obj = run_json(capsys, "center-check", "--r", "4", "--nmax", "3")
    assert code == 0 and obj["pass"] is True
    assert all(e["pass"] for e in obj["results"])
    code, obj = run_json(capsys, "center-rank", "--k", "2")
    assert code == 0 and obj["rank"] == 4 and obj["stable"]


def test_branch_and_paths(capsys):
    code, obj = run_json(capsys, "branch", "--level", "6")
    assert code == 0 and len(obj["vertices"]) == 7
    code, out, _ = run(capsys, "paths", "--shape", "2,1", "--l", "0", "--level", "6", "--count-only")
    assert code == 0 and "count" in out


def test_std_path_contents(capsys):
    code, obj = run_json(capsys, "std-path", "--shape", "2,1", "--l", "0", "--level", "6", "--contents")
    assert code == 0
    assert {"a": "-1", "b": "-1/2"} in obj["contents"]


def test_blocks(capsys):
    code, obj = run_json(capsys, "blocks", "--k", "3", "--delta", "1", "--method", "both")
    assert code == 0
    assert obj["crosscheck"] is True
    assert obj["delta"] == "1" and obj["k"] == 3
    assert [{"shape": [], "l": 3}, {"shape": [2], "l": 1}, {"shape": [2, 1], "l": 0}] in obj["classes"]


def test_deterministic(capsys):
    first = run(capsys, "blocks", "--k", "4", "--delta", "2")
    second = run(capsys, "blocks", "--k", "4", "--delta", "2")
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "partalg", "mul", PI, GAMMA],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["removed"] == 1


def test_mul_specializes_elements(capsys):
    e = json.dumps({"k": 1, "mode": "poly", "terms": [{"coeff": ["0", "1"], "diagram": [[1], [-1]]}]})
    code, obj = run_json(capsys, "mul", e, e, "--delta", "3")
    assert code == 0
    assert obj["mode"] == "rational" and obj["terms"] == [{"coeff": "27", "diagram": [[1], [-1]]}]
