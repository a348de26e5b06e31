"""Command-line front end: ``appellf2 {eval,findall,expose,roc,compare,selftest}``.

Exit codes: 0 success, 1 other failure, 2 domain error (singular curve,
exceptional point, point outside a forced ROC), 3 logarithmic case or pole,
4 non-convergence.  Complex parameters are written ``re`` or ``re,im``.
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
from typing import Sequence

import numpy as np

from . import catalog, evaluator, oracles
from .errors import (
    AppellF2Error,
    DomainError,
    LogarithmicCaseError,
    NonConvergenceError,
    PoleError,
)
from .params import EPS_SING, EvalPoint, ParameterSet
from .series import term_grid

EXIT_OK = 0
EXIT_OTHER = 1
EXIT_DOMAIN = 2
EXIT_LOG = 3
EXIT_NONCONV = 4

VALUE_FLAGS = ("-a", "-b1", "-b2", "-c1", "-c2", "-x", "-y")
_NUMERIC = re.compile(r"^-[0-9.]")

DEMO_PARAMS = (2.2345, 3.363, 0.242, 8.3452, 0.657)
DEMO_POINT = (-2.311, 5.322)
DEMO_VALUE = complex(0.09333639793, -0.06847416686)

# (label, params, point, expected real value)
REFERENCE_FIXTURES = (
    ("point 1", (-4.49158729455734, 4.69491717746224, -2.67898515537678,
               2.54939072003598, 1.89372308769086),
     (-0.657865707164980, 1.11972469394233), 183.83),
    ("point 2", (-5.87056003391116, 4.33993527730256, 1.44218908732163,
               3.12652020729955, 1.52984418542146),
     (-6.55177221618387, -6.79935054310963), 1.171e7),
    ("point 8", (3.35171139159466, -0.509725596574174, -0.913836915342344,
               -3.32588271257136, 0.168816510623319),
     (-2.29531801533183, -6.06415712186627), -61.38),
    ("point 9", (-5.01240784115629, -4.94200818581766, 6.99477562102917,
               6.65313744284692, -1.96099117581162),
     (2.92126097205082, -1.31245113310376), 6.00e6),
    ("point 17", (-3.36021432698409, 6.63749440272489, -6.58339249087694,
                -2.02579013838810, 6.18081281041145),
     (-4.71272838790961, -6.11479355971970), -3.20e6),
)


def parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise argparse.ArgumentTypeError(f"expected 're' or 're,im', got {text!r}")


def _merge_negative_values(argv: Sequence[str]) -> list[str]:
    """Join ``-x -2.3`` or ``-a -1,2`` into ``-x=-2.3`` so argparse does not read the value as a flag."""
    out: list[str] = []
    argv = list(argv)
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in VALUE_FLAGS and i + 1 < len(argv) and _NUMERIC.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _add_params(p: argparse.ArgumentParser, required: bool = True) -> None:
    for name in ("a", "b1", "b2", "c1", "c2"):
        p.add_argument(f"-{name}", dest=name, type=parse_complex, required=required,
                       metavar="RE[,IM]")


def _add_point(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("-x", dest="x", type=float, required=required)
    p.add_argument("-y", dest="y", type=float, required=required)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--eps-sing", type=float, default=EPS_SING)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="appellf2", description="Numerical evaluation of the Appell F2 function."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate F2 at one point")
    _add_params(p, required=False)
    _add_point(p, required=False)
    p.add_argument("-p", "--precision", type=int, default=6)
    p.add_argument("-t", "--terms", type=int, default=100)
    p.add_argument("--verbose", action="store_true", help="print per-ring partial sums")
    p.add_argument("--batch", help="file of rows 'a b1 b2 c1 c2 x y'")
    _add_common(p)

    p = sub.add_parser("findall", help="list representations valid at a point")
    _add_point(p)
    _add_common(p)

    p = sub.add_parser("expose", help="print a catalog entry")
    p.add_argument("-s", "--series", required=True)
    _add_common(p)

    p = sub.add_parser("roc", help="rasterize a region of convergence")
    p.add_argument("-s", "--series", required=True)
    _add_point(p, required=False)
    p.add_argument("--grid", type=int, default=200)
    p.add_argument("--range", nargs=2, type=float, default=(-6.0, 6.0), metavar=("LO", "HI"))
    p.add_argument("--out", help="PGM output path (default: stdout)")
    p.add_argument("--svg", help="optional SVG output path")
    _add_common(p)

    p = sub.add_parser("compare", help="all representations and oracles at one point")
    _add_params(p)
    _add_point(p)
    p.add_argument("-t", "--terms", type=int, default=150)
    _add_common(p)

    p = sub.add_parser("selftest", help="run the built-in fixtures")
    _add_common(p)
    return parser


# ---------------------------------------------------------------------------
# commands


def _params(ns) -> ParameterSet:
    return ParameterSet(ns.a, ns.b1, ns.b2, ns.c1, ns.c2)


def _emit(ns, text: str, obj) -> None:
    if ns.format == "json":
        print(json.dumps(obj))
    else:
        print(text)


def _verbose_rings(report: evaluator.EvaluationReport, params, point) -> list[str]:
    parts = catalog.instantiate(report.chosen, params, point)
    total = np.zeros(report.terms, dtype=complex)
    for part in parts:
        if part.coefficient == 0:
            continue
        V = term_grid(part.series, params, part.X, part.Y, report.terms)
        rings = np.array([V[k, : k + 1].sum() + V[:k, k].sum() for k in range(report.terms)])
        total += part.coefficient * rings
    partial = np.cumsum(total)
    step = max(1, report.terms // 10)
    lines = []
    for k in list(range(0, report.terms, step)) + [report.terms - 1]:
        lines.append(f"  ring {k:4d}: {evaluator.format_complex(complex(partial[k]), 15)}")
    return lines


def _eval_one(ns, params: ParameterSet, point: EvalPoint) -> tuple[str, dict]:
    rep = evaluator.evaluate(params, point, ns.precision, ns.terms, ns.eps_sing)
    lines = ["candidates (series, package #, rate):"]
    for c in rep.candidates:
        lines.append(f"  {c.id:<4} #{c.package_number:<3} {c.rate:.4g}")
    lines.append(f"selected series: {rep.chosen} (package #{rep.package_number})")
    if ns.verbose:
        lines.extend(_verbose_rings(rep, params, point))
    lines.append(f"digits: {rep.digits}  error estimate: {rep.error_estimate:.3g}")
    lines.append(f"value: {rep.display()}")
    return "\n".join(lines), rep.to_dict()


def cmd_eval(ns) -> int:
    if ns.batch:
        return _eval_batch(ns)
    missing = [n for n in ("a", "b1", "b2", "c1", "c2", "x", "y") if getattr(ns, n) is None]
    if missing:
        raise argparse.ArgumentError(None, f"missing arguments: {', '.join('-' + m for m in missing)}")
    text, obj = _eval_one(ns, _params(ns), EvalPoint(ns.x, ns.y))
    _emit(ns, text, obj)
    return EXIT_OK


def _eval_batch(ns) -> int:
    worst = EXIT_OK
    with open(ns.batch, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            fields = line.split()
            if not fields or fields[0].startswith("#"):
                continue
            if len(fields) != 7:
                print(f"line {lineno}: expected 7 fields", file=sys.stderr)
                worst = max(worst, EXIT_OTHER)
                continue
            params = ParameterSet(*(parse_complex(f) for f in fields[:5]))
            point = EvalPoint(float(fields[5]), float(fields[6]))
            try:
                rep = evaluator.evaluate(params, point, ns.precision, ns.terms, ns.eps_sing)
                if ns.format == "json":
                    print(json.dumps(rep.to_dict()))
                else:
                    print(f"{rep.display()}\t{rep.chosen}\t{rep.digits}")
            except AppellF2Error as exc:
                code = exit_code(exc)
                worst = max(worst, code)
                if ns.format == "json":
                    print(json.dumps(error_object(exc, code)))
                else:
                    print(f"error\t{type(exc).__name__}\t{exc}")
    return worst


def cmd_findall(ns) -> int:
    point = EvalPoint(ns.x, ns.y)
    ids = evaluator.find_all(point, ns.eps_sing)
    reps = [catalog.get_representation(i) for i in ids]
    text = "\n".join(f"{r.id} (package #{r.package_number})" for r in reps) or "(none)"
    obj = [{"id": r.id, "package_number": r.package_number} for r in reps]
    _emit(ns, text, obj)
    return EXIT_OK


def cmd_expose(ns) -> int:
    rep = catalog.get_representation(ns.series)
    text = catalog.expose(rep.id)
    obj = {"id": rep.id, "package_number": rep.package_number, "roc": rep.roc_text(),
           "components": [c.describe() for c in rep.components]}
    if ns.format == "json":
        print(json.dumps(obj))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def roc_raster(rep_id: str, grid: int, lo: float, hi: float, eps_sing: float = EPS_SING) -> np.ndarray:
    """``grid x grid`` array: 1 inside, 0 outside, 2 on a singular curve; row 0 is the top (largest y)."""
    rep = catalog.get_representation(rep_id)
    step = (hi - lo) / grid
    centers = lo + (np.arange(grid) + 0.5) * step
    out = np.zeros((grid, grid), dtype=np.uint8)
    for row in range(grid):
        y = centers[grid - 1 - row]
        for col in range(grid):
            pt = EvalPoint(centers[col], y)
            if pt.singular_curves(eps_sing):
                out[row, col] = 2
            elif rep.contains(pt):
                out[row, col] = 1
    return out


def write_pgm(raster: np.ndarray) -> str:
    h, w = raster.shape
    lines = ["P2", f"{w} {h}", "2"]
    lines.extend(" ".join(str(int(v)) for v in row) for row in raster)
    return "\n".join(lines) + "\n"


def write_svg(raster: np.ndarray, lo: float, hi: float, point=None) -> str:
    n = raster.shape[0]
    scale = 600.0 / n
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="600" height="600" '
             f'viewBox="0 0 600 600">', '<rect width="600" height="600" fill="white"/>']
    colors = {1: "#6fa8dc", 2: "#cc0000"}
    for row in range(n):
        col = 0
        while col < n:
            v = int(raster[row, col])
            start = col
            while col < n and raster[row, col] == v:
                col += 1
            if v in colors:
                parts.append(
                    f'<rect x="{start * scale:.3f}" y="{row * scale:.3f}" '
                    f'width="{(col - start) * scale:.3f}" height="{scale:.3f}" fill="{colors[v]}"/>'
                )
    if point is not None:
        px = (point[0] - lo) / (hi - lo) * 600.0
        py = (hi - point[1]) / (hi - lo) * 600.0
        parts.append(f'<circle cx="{px:.3f}" cy="{py:.3f}" r="5" fill="black"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_roc(ns) -> int:
    lo, hi = ns.range
    if not hi > lo or ns.grid < 1:
        raise ValueError("--range needs LO < HI and --grid >= 1")
    rep = catalog.get_representation(ns.series)
    raster = roc_raster(rep.id, ns.grid, lo, hi, ns.eps_sing)
    pgm = write_pgm(raster)
    if ns.out:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(pgm)
    else:
        sys.stdout.write(pgm)
    point = (ns.x, ns.y) if ns.x is not None and ns.y is not None else None
    if ns.svg:
        with open(ns.svg, "w", encoding="utf-8") as fh:
            fh.write(write_svg(raster, lo, hi, point))
    if ns.out:
        inside = float((raster == 1).mean())
        msg = f"{rep.id}: inside fraction {inside:.4f}"
        if point is not None:
            msg += f"; query point {'inside' if rep.contains(EvalPoint(*point)) else 'outside'}"
        print(msg)
    return EXIT_OK


def compare_methods(params: ParameterSet, point: EvalPoint, terms: int, eps_sing: float = EPS_SING):
    """name -> (value, accuracy estimate) over every valid representation and applicable oracle."""
    results: dict[str, tuple[complex, float]] = {}
    for rep_id, res in evaluator.evaluate_all(params, point, terms, eps_sing).items():
        if not isinstance(res, Exception):
            results[rep_id] = res
    runs = (
        ("BruteForce", lambda: oracles.brute_force_f2(params, point, 200)),
        ("SingleSum", lambda: oracles.single_sum_f2(params, point, 200)),
        ("EulerQuad", lambda: oracles.euler_quad_f2(params, point)),
    )
    for name, run in runs:
        try:
            r = run()
        except (DomainError, LogarithmicCaseError, PoleError):
            continue
        results[name] = (r.value, r.estimated_accuracy)
    return results


def cmd_compare(ns) -> int:
    params, point = _params(ns), EvalPoint(ns.x, ns.y)
    point.check_regular(ns.eps_sing)
    params.validate()
    results = compare_methods(params, point, ns.terms, ns.eps_sing)
    names = list(results)
    matrix = {}
    for n1, n2 in itertools.product(names, names):
        v1, v2 = results[n1][0], results[n2][0]
        scale = max(abs(v1), abs(v2))
        matrix[n1, n2] = abs(v1 - v2) / scale if scale else 0.0
    trusted = [n for n in names if results[n][1] <= 1e-10 * max(abs(results[n][0]), 1e-300)]
    max_dev = max((matrix[a, b] for a, b in itertools.combinations(trusted, 2)), default=0.0)
    lines = [f"{'method':<11} {'value':<48} accuracy"]
    for n in names:
        v, acc = results[n]
        lines.append(f"{n:<11} {evaluator.format_complex(v, 15):<48} {acc:.2e}")
    lines.append("")
    lines.append("relative deviation matrix:")
    lines.append(" " * 11 + "".join(f"{n:>11}" for n in names))
    for n1 in names:
        lines.append(f"{n1:<11}" + "".join(f"{matrix[n1, n2]:>11.2e}" for n2 in names))
    lines.append("")
    lines.append(f"max pairwise deviation (methods with accuracy < 1e-10): {max_dev:.3e}")
    obj = {
        "values": {n: [results[n][0].real, results[n][0].imag] for n in names},
        "accuracy": {n: results[n][1] for n in names},
        "matrix": {f"{a}|{b}": matrix[a, b] for a, b in matrix},
        "trusted": trusted,
        "max_deviation": max_dev,
    }
    _emit(ns, "\n".join(lines), obj)
    return EXIT_OK


def selftest_cases():
    """(name, passed, detail) for the demo point and the reference fixtures."""
    out = []
    rep = evaluator.evaluate(ParameterSet(*DEMO_PARAMS), EvalPoint(*DEMO_POINT), 10, 100)
    rel = abs(rep.value - DEMO_VALUE) / abs(DEMO_VALUE)
    out.append(("demo", rel < 1e-8, f"{rep.display()} rel.err {rel:.2e}"))
    for label, p, x, expected in REFERENCE_FIXTURES:
        try:
            rep = evaluator.evaluate(ParameterSet(*p), EvalPoint(*x), 15, 300)
            rel = abs(rep.value.real - expected) / abs(expected)
            ok = rel < 5e-3 and abs(rep.value.imag) < 1e-5 * abs(rep.value.real)
            out.append((label, ok, f"{rep.value.real:.6g} ({rep.chosen}) rel.err {rel:.2e}"))
        except AppellF2Error as exc:
            out.append((label, False, f"{type(exc).__name__}: {exc}"))
    return out


def cmd_selftest(ns) -> int:
    cases = selftest_cases()
    text = "\n".join(f"{'PASS' if ok else 'FAIL'} {name}: {detail}" for name, ok, detail in cases)
    obj = [{"name": n, "passed": ok, "detail": d} for n, ok, d in cases]
    _emit(ns, text, obj)
    return EXIT_OK if all(ok for _, ok, _ in cases) else EXIT_OTHER


COMMANDS = {
    "eval": cmd_eval,
    "findall": cmd_findall,
    "expose": cmd_expose,
    "roc": cmd_roc,
    "compare": cmd_compare,
    "selftest": cmd_selftest,
}


def exit_code(exc: BaseException) -> int:
    if isinstance(exc, NonConvergenceError):
        return EXIT_NONCONV
    if isinstance(exc, (LogarithmicCaseError, PoleError)):
        return EXIT_LOG
    if isinstance(exc, DomainError):
        return EXIT_DOMAIN
    return EXIT_OTHER


def error_object(exc: BaseException, code: int) -> dict:
    return {"error": type(exc).__name__, "message": str(exc), "exit_code": code}


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    ns = parser.parse_args(_merge_negative_values(argv))
    try:
        return COMMANDS[ns.command](ns)
    except argparse.ArgumentError as exc:
        parser.error(str(exc))
    except (AppellF2Error, ValueError, OSError) as exc:
        code = exit_code(exc)
        if getattr(ns, "format", "text") == "json":
            print(json.dumps(error_object(exc, code)))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return code
    return EXIT_OTHER


if __name__ == "__main__":
    sys.exit(main())
