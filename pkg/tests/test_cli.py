import io
import json
import subprocess
import sys

import pytest

from nashjac.cli import SCHEMA, main


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = out, err
    try:
        code = main(argv)
    finally:
        sys.stdout, sys.stderr = old
    return code, out.getvalue(), err.getvalue()


def test_tjurina_json_for_the_cusp():
    code, out, _ = run(["tjurina", "--poly", "x^3 - y^2", "--n", "1", "--weights", "2,3", "--format", "json"])
    data = json.loads(out)
    assert code == 0
    assert data["schema"] == SCHEMA
    assert data["dimension"] == 2
    assert data["hilbert"] == {"0": 1, "2": 1}
    assert data["socle"] == 2


def test_jac_json_labels_rows_and_columns():
    code, out, _ = run(["jac", "--poly", "x1^3 - x2^2", "--n", "2", "--format", "json"])
    data = json.loads(out)
    assert data["rows"] == [[0, 0], [1, 0], [0, 1]]
    assert data["cols"][0] == [1, 0]
    assert data["entries"][0][0] == "3*x1^2"
    assert data["poly"]["text"] == "x1^3 - x2^2"


def test_rationals_are_strings():
    _, out, _ = run(["minors", "--poly", "1/2*x^3 - y^2", "--n", "1", "--format", "json"])
    data = json.loads(out)
    assert [[3, 0], "1/2"] in data["poly"]["terms"]


def test_inconsistent_weights_exit_two():
    code, out, err = run(["tjurina", "--poly", "x^3 - y^2", "--n", "1", "--weights", "1,1"])
    assert code == 2 and out == "" and "not weighted homogeneous" in err


def test_parse_error_exit_two():
    code, _, err = run(["jac", "--poly", "x^", "--n", "1"])
    assert code == 2 and "column" in err


def test_not_isolated_exit_two():
    code, _, err = run(["tjurina", "--poly", "x^2*y", "--n", "1", "--weights", "1,1"])
    assert code == 2 and "isolated" in err


def test_theorem_b_hypothesis_error_and_permute():
    code, _, _ = run(["check", "theorem-b", "--poly", "x^3 - y^2", "--n", "3"])
    assert code == 2
    code, out, _ = run(["check", "theorem-b", "--poly", "x^3 - y^2", "--n", "3", "--permute", "--format", "json"])
    data = json.loads(out)
    assert code == 0 and data["weights"] == [3, 2] and data["variables"] == ["y", "x"]


def test_check_bounds_modes():
    assert run(["check", "bounds", "--s", "2", "--n", "3"])[0] == 0
    code, out, _ = run(["check", "bounds", "--weights", "1,1", "--n", "3", "--format", "json"])
    assert code == 0
    rep = json.loads(out)["reports"][0]
    assert rep["exceptional"][0]["c"] == 6


def test_out_file(tmp_path):
    target = tmp_path / "r.json"
    code, out, _ = run(["ders", "--poly", "x^2 - y^3", "--n", "1", "--format", "json", "--out", str(target)])
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["negative"] is False


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nashjac", "check", "theorem-a", "--poly", "x^3 - y^2", "--n", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "pass" in proc.stdout
