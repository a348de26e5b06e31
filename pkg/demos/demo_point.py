"""Walk through one evaluation: valid representations, their rates, and how the sums settle.

Run: python3 demos/demo_point.py
"""

from appellf2 import EvalPoint, ParameterSet, convergence_rate, evaluate, evaluate_all, find_all
from appellf2.evaluator import format_complex

params = ParameterSet(2.2345, 3.363, 0.242, 8.3452, 0.657)
point = EvalPoint(-2.311, 5.322)

ids = find_all(point)
print(f"valid at ({point.x}, {point.y}): {ids}")
for rep_id in ids:
    print(f"  {rep_id}: rate {convergence_rate(rep_id, params, point):.3f}")

rep = evaluate(params, point, precision=10, terms=100)
print(f"selected {rep.chosen}, value {rep.display()}, {rep.digits} digits")

# raw partial sums of both candidates: the one with rate above one settles more slowly
print("\nterms  S15                                       S7")
for terms in (25, 50, 100, 200):
    sums = evaluate_all(params, point, terms)
    row = [f"{terms:5d}"]
    for rep_id in ("S15", "S7"):
        value, err = sums[rep_id]
        row.append(f"{format_complex(value, 10):<30} err {err:.1e}")
    print("  ".join(row))
