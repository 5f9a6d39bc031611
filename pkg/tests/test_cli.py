import json
import subprocess
import sys

import pytest

from riordanpaths import IntMatrix, StepSpec, matrix_from_json
from riordanpaths.cli import main
from riordanpaths.goldens import MATRICES


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_series_text_and_json(capsys):
    assert run(capsys, "series", "1/(1-x-x^2)", "--order", "8") == (0, "1, 1, 2, 3, 5, 8, 13, 21", "")
    code, out, _ = run(capsys, "series", "(1-sqrt(1-4*x))/(2*x)", "--order", "6", "--format", "json")
    assert json.loads(out) == ["1", "1", "2", "5", "14", "42"]


def test_series_rational_output(capsys):
    code, out, _ = run(capsys, "series", "1/(2-x)", "--order", "3")
    assert out == "1/2, 1/4, 1/8"


def test_definitions_are_ordered(capsys):
    code, out, _ = run(capsys, "series", "c(x^2)", "--order", "6", "--fix", "c=1+x*c^2")
    assert out == "1, 0, 1, 0, 2, 0"
    code, out, _ = run(capsys, "series", "d", "--order", "4", "--def", "c=1/(1-x)", "--def", "d=c*c")
    assert out == "1, 2, 3, 4"


def test_riordan_matrix_json_roundtrip(capsys):
    code, out, _ = run(capsys, "riordan", "--g", "1/(1-x)", "--f", "x*(1+x)/(1-x)", "--format", "json")
    assert code == 0
    assert matrix_from_json(out) == MATRICES["delannoy_triangle"]


@pytest.mark.parametrize("show,golden", [
    ("rectified", "delannoy_square"),
    ("stretched", "delannoy_stretched"),
    ("triangulated", "delannoy_triangulated"),
])
def test_riordan_views(capsys, show, golden):
    code, out, _ = run(capsys, "riordan", "--g", "1/(1-x)", "--f", "x*(1+x)/(1-x)", "--show", show,
                       "--format", "csv")
    assert IntMatrix([[int(v) for v in line.split(",")] for line in out.splitlines()]) == MATRICES[golden]


def test_riordan_product_and_apply(capsys):
    code, out, _ = run(capsys, "riordan", "--g", "1/(1-x)", "--f", "x/(1-x)", "--times", "1/(1+x)", "x/(1+x)",
                       "--show", "row-sums", "--size", "5")
    assert out == "1, 1, 1, 1, 1"
    code, out, _ = run(capsys, "riordan", "--g", "1/(1-x)", "--f", "x/(1-x)", "--apply", "1/(1-x)", "--size", "5")
    assert out == "1, 2, 4, 8, 16"


def test_almost(capsys):
    code, out, _ = run(capsys, "almost", "--a", "1/(1-x)", "--g", "(1+x)/(1-x)^2", "--f", "x/(1-x)",
                       "--show", "row-sums", "--size", "6")
    assert out == "1, 2, 5, 11, 23, 47"


def test_paths_flags_and_spec_file(capsys, tmp_path):
    code, out, _ = run(capsys, "paths", "--steps", "(1,1),(0,-1)", "--show", "left-factors", "--size", "6")
    assert out == "1, 2, 5, 14, 42, 132"
    spec = StepSpec("(1,1),(2,0),(2,1)", levels={0: "(1,0),(1,1)", 1: "(1,0),(1,1),(2,1)"})
    path = tmp_path / "spec.json"
    path.write_text(spec.to_json())
    code, out, _ = run(capsys, "paths", "--spec", str(path), "--format", "json")
    assert matrix_from_json(out) == MATRICES["almost_1"]
    code, out, _ = run(capsys, "paths", "--steps", "(1,0),(1,1),(2,1)", "--level", "0=(2,0),(1,1)",
                       "--level", "1=(1,0),(1,1)", "--format", "json")
    assert matrix_from_json(out) == MATRICES["almost_2"]
    assert run(capsys, "paths", "--steps", "(1,1),(0,-1)", "--show", "potential")[1] == "2, -1"


def test_production(capsys, tmp_path):
    code, out, _ = run(capsys, "production", "--g", "1/(1-x)", "--f", "x/(1-x)", "--show", "a", "--size", "4")
    assert out == "1, 1, 0, 0"
    path = tmp_path / "m.json"
    path.write_text(json.dumps([[1, 0, 0], [1, 2, 0], [1, 1, 3]]))
    code, out, _ = run(capsys, "production", "--matrix", str(path), "--size", "2", "--format", "json")
    assert json.loads(out) == [["1", "2"], ["0", "-1/2"]]


def test_amatrix(capsys, tmp_path):
    code, out, _ = run(capsys, "amatrix", "--rows", "1,1", "--rho", "1", "--size", "8")
    assert out == "1, 2, 6, 22, 90, 394, 1806, 8558"
    code, out, _ = run(capsys, "amatrix", "--rows", "1", "--term", "1,-2,3", "--term", "1,0,1", "--size", "6")
    assert out == "1, 2, 8, 44, 280, 1936"
    path = tmp_path / "a.json"
    path.write_text(json.dumps({"rows": [[1, 2]], "rho": [1]}))
    assert run(capsys, "amatrix", "--spec", str(path), "--show", "verify")[1] == "true"


def test_transforms(capsys):
    assert run(capsys, "transform", "hankel", "1,1,2,5,14,42,132")[1] == "1, 1, 1, 1"
    assert run(capsys, "transform", "invert", "1/(1-x)", "--order", "5")[1] == "1, 2, 4, 8, 16"
    code, out, _ = run(capsys, "transform", "cf", "--cf-kind", "jacobi", "--b", "1,1,1,1,1", "--lam", "1,1,1,1,1",
                       "--order", "9")
    assert out == "1, 1, 2, 4, 9, 21, 51, 127, 323"
    code, out, _ = run(capsys, "transform", "jfraction", "(1-x-sqrt(1-6*x+x^2))/(2*x)", "--depth", "4",
                       "--format", "json")
    assert json.loads(out) == {"b": ["2", "3", "3", "3"], "lam": ["2", "2", "2", "2"]}
    assert run(capsys, "transform", "somos4", "1,1,1,1,2,3,7,23,59", "--A", "1", "--B", "1")[1] == "true"
    code, out, _ = run(capsys, "transform", "named", "ternary-T", "--conjugate", "1", "--format", "json")
    assert matrix_from_json(out) == MATRICES["ternary_narayana"]


def test_output_file(capsys, tmp_path):
    path = tmp_path / "out.csv"
    assert run(capsys, "series", "1+x", "--order", "3", "--format", "csv", "--output", str(path))[:2] == (0, "")
    assert path.read_text() == "1,1,0\n"


@pytest.mark.parametrize("argv,code", [
    (["series", "1+"], 2),
    (["series", "2x"], 2),
    (["series", "1+x", "--size", "0"], 2),
    (["paths"], 2),
    (["paths", "--steps", "(1,0)", "--level", "zero"], 2),
    (["amatrix"], 2),
    (["amatrix", "--rows", "1", "--term", "1,2"], 2),
    (["transform", "somos4", "1,1,1,1,1"], 2),
    (["production", "--matrix", "/nonexistent.json"], 2),
    (["series", "1/x", "--order", "4"], 1),
    (["series", "sqrt(2+x)"], 1),
    (["riordan", "--g", "x", "--f", "x"], 1),
    (["paths", "--steps", "(1,0),(-1,0)"], 1),
    (["transform", "cf", "--cf-kind", "jacobi", "--b", "1", "--lam", "1", "--order", "8"], 1),
    (["bogus"], 2),
])
def test_exit_codes(capsys, argv, code):
    assert main(argv) == code
    err = capsys.readouterr().err
    assert err


def test_check_subset(capsys):
    code, out, _ = run(capsys, "check", "--criterion", "6")
    assert code == 0
    assert out == "PASS criterion 6: Somos-4 Hankel transforms (4/4)"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "riordanpaths", "series", "1/(1-x)", "--order", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1, 1, 1"
