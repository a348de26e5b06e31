"""Evaluate the published reference points and show which representation each one uses.

Run: python3 demos/reference_points.py
"""

import time

from appellf2 import EvalPoint, ParameterSet, evaluate
from appellf2.cli import REFERENCE_FIXTURES

for label, p, x, printed in REFERENCE_FIXTURES:
    t0 = time.perf_counter()
    rep = evaluate(ParameterSet(*p), EvalPoint(*x), precision=15, terms=300)
    dt = time.perf_counter() - t0
    rel = abs(rep.value.real - printed) / abs(printed)
    ranked = ", ".join(f"{c.id}:{c.rate:.2f}" for c in rep.candidates)
    print(f"{label:<9} {rep.value.real:>14.6g}  printed {printed:<10g} rel {rel:.1e}  "
          f"via {rep.chosen:<4} [{ranked}]  {dt:.2f}s")
