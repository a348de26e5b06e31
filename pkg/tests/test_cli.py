"""Command-line front end."""

import json
import subprocess
import sys

import numpy as np
import pytest

from appellf2 import EvalPoint, get_representation
from appellf2.cli import EXIT_DOMAIN, EXIT_LOG, EXIT_OK, main

DEMO_ARGS = ["-a", "2.2345", "-b1", "3.363", "-b2", "0.242", "-c1", "8.3452", "-c2", "0.657",
             "-x", "-2.311", "-y", "5.322"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_demo(capsys):
    code, out, _ = run(capsys, "eval", *DEMO_ARGS, "-p", "4", "-t", "100")
    assert code == EXIT_OK
    lines = out.splitlines()
    # [PAPER] value printed at 4 digits
    assert lines[-1] == "value: 0.09334 - 0.06847 I"
    assert "selected series: S15 (package #29)" in lines
    assert lines[0].startswith("candidates")


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", *DEMO_ARGS, "-p", "10", "--format", "json")
    obj = json.loads(out)
    assert code == EXIT_OK
    assert obj["chosen"] == "S15"
    assert obj["package_number"] == 29
    assert complex(*obj["value"]) == pytest.approx(complex(0.09333639793, -0.06847416686), rel=1e-8)
    assert [c["id"] for c in obj["candidates"]] == ["S15", "S7"]


def test_eval_verbose(capsys):
    code, out, _ = run(capsys, "eval", *DEMO_ARGS, "-t", "50", "--verbose")
    assert code == EXIT_OK
    assert sum("ring" in line for line in out.splitlines()) == 11


def test_eval_exceptional_point(capsys):
    args = DEMO_ARGS[:10] + ["-x", "0.5", "-y", "0.5"]
    code, _, err = run(capsys, "eval", *args)
    assert code == EXIT_DOMAIN
    assert "exceptional point" in err
    assert "(0.5, 0.5)" in err


def test_eval_pole(capsys):
    args = ["-a", "1", "-b1", "1", "-b2", "1", "-c1", "-2", "-c2", "1", "-x", "0.2", "-y", "0.3"]
    code, _, _ = run(capsys, "eval", *args)
    assert code == EXIT_LOG


def test_eval_error_json(capsys):
    args = DEMO_ARGS[:10] + ["-x", "0", "-y", "0.3", "--format", "json"]
    code, out, _ = run(capsys, "eval", *args)
    obj = json.loads(out)
    assert code == EXIT_DOMAIN
    assert obj == {"error": "SingularCurveError", "message": obj["message"], "exit_code": EXIT_DOMAIN}


def test_eval_missing_arguments(capsys):
    with pytest.raises(SystemExit) as info:
        main(["eval", "-a", "1", "-x", "0.2", "-y", "0.3"])
    assert info.value.code != 0


def test_eval_complex_parameter(capsys):
    args = ["-a", "0.5,0.3", "-b1", "1.2", "-b2", "-0.4,1", "-c1", "2.2", "-c2", "1.7",
            "-x", "0.2", "-y", "-0.3", "--format", "json"]
    code, out, _ = run(capsys, "eval", *args)
    assert code == EXIT_OK
    assert json.loads(out)["chosen"]


def test_eval_batch(tmp_path, capsys):
    batch = tmp_path / "points.txt"
    batch.write_text(
        "# a b1 b2 c1 c2 x y\n"
        "2.2345 3.363 0.242 8.3452 0.657 -2.311 5.322\n"
        "1 1 1 3 3 0.5 0.5\n"
    )
    code, out, _ = run(capsys, "eval", "--batch", str(batch), "-p", "4")
    lines = out.splitlines()
    assert lines[0].startswith("0.09334 - 0.06847 I\tS15")
    assert lines[1].startswith("error\tSingularCurveError")
    assert code == EXIT_DOMAIN


def test_findall_demo(capsys):
    code, out, _ = run(capsys, "findall", "-x", "-2.311", "-y", "5.322")
    assert code == EXIT_OK
    assert "S7 (package #15)" in out
    assert "S15 (package #29)" in out


def test_findall_json(capsys):
    code, out, _ = run(capsys, "findall", "-x", "-2.311", "-y", "5.322", "--format", "json")
    assert {d["package_number"] for d in json.loads(out)} == {15, 29}


def test_expose(capsys):
    code, out, _ = run(capsys, "expose", "-s", "S7")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "S7 #15 ROC: Abs[(x+y-1)/x]<1 && Abs[x/(x-1)]<1"


def test_expose_unknown(capsys):
    code, _, _ = run(capsys, "expose", "-s", "S42")
    assert code != EXIT_OK


def _read_pgm(text):
    tokens = text.split()
    assert tokens[0] == "P2"
    w, h, maxval = int(tokens[1]), int(tokens[2]), int(tokens[3])
    assert maxval == 2
    return np.array([int(t) for t in tokens[4:]]).reshape(h, w)


def test_roc_raster_matches_predicate(tmp_path, capsys):
    out_path, svg_path = tmp_path / "s7.pgm", tmp_path / "s7.svg"
    code, out, _ = run(capsys, "roc", "-s", "S7", "-x", "-2.311", "-y", "5.322", "--range", "-6", "6",
                       "--grid", "60", "--out", str(out_path), "--svg", str(svg_path))
    assert code == EXIT_OK
    assert "query point inside" in out
    raster = _read_pgm(out_path.read_text())
    rep = get_representation("S7")
    step = 12.0 / 60
    for row in range(60):
        for col in range(60):
            pt = EvalPoint(-6 + (col + 0.5) * step, 6 - (row + 0.5) * step)
            expected = 2 if pt.singular_curves() else int(rep.contains(pt))
            assert raster[row, col] == expected
    assert svg_path.read_text().startswith("<svg")


def test_compare_triple_oracle_point(capsys):
    args = ["-a", "1", "-b1", "1", "-b2", "1", "-c1", "3", "-c2", "3", "-x", "0.2", "-y", "0.3"]
    code, out, _ = run(capsys, "compare", *args, "--format", "json")
    obj = json.loads(out)
    assert code == EXIT_OK
    assert {"BruteForce", "SingleSum", "EulerQuad", "S1"} <= set(obj["trusted"])
    assert obj["max_deviation"] < 1e-8


def test_compare_text(capsys):
    args = ["-a", "1", "-b1", "1", "-b2", "1", "-c1", "3", "-c2", "3", "-x", "0.2", "-y", "0.3"]
    code, out, _ = run(capsys, "compare", *args)
    assert "relative deviation matrix:" in out
    assert out.splitlines()[-1].startswith("max pairwise deviation")


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == EXIT_OK
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "appellf2", "eval", *DEMO_ARGS, "-p", "4"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout.splitlines()[-1] == "value: 0.09334 - 0.06847 I"
