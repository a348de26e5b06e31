"""Numerical evaluation of the Appell F2 function.

F2 is evaluated at real (x, y) for complex parameters by choosing, among 18
series representations, the one valid at the point that converges fastest.
"""

from .catalog import CATALOG, expose, get_representation, list_representations, roc_contains
from .errors import (
    AppellF2Error,
    DomainError,
    LogarithmicCaseError,
    NonConvergenceError,
    NoValidSeriesError,
    OutOfROCError,
    PoleError,
    SeriesOverflowError,
    SingularCurveError,
    StencilDomainError,
    UnknownIdError,
    ZeroTermError,
)
from .evaluator import (
    Candidate,
    EvaluationReport,
    convergence_rate,
    evaluate,
    evaluate_all,
    evaluate_with,
    find_all,
)
from .oracles import brute_force_f2, euler_quad_f2, pde_residual, single_sum_f2
from .params import EvalPoint, ParameterSet
from .special import gamma_ratio, gauss_2f1, log_gamma, pochhammer


def appell_f2(a, b1, b2, c1, c2, x, y, precision: int = 10, terms: int = 100) -> complex:
    """Convenience wrapper returning only the value."""
    return evaluate(ParameterSet(a, b1, b2, c1, c2), EvalPoint(x, y), precision, terms).value


__all__ = [
    "CATALOG", "AppellF2Error", "Candidate", "DomainError", "EvalPoint", "EvaluationReport",
    "LogarithmicCaseError", "NoValidSeriesError", "NonConvergenceError", "OutOfROCError",
    "ParameterSet", "PoleError", "SeriesOverflowError", "SingularCurveError",
    "StencilDomainError", "UnknownIdError", "ZeroTermError", "appell_f2", "brute_force_f2",
    "convergence_rate", "euler_quad_f2", "evaluate", "evaluate_all", "evaluate_with", "expose",
    "find_all", "gamma_ratio", "gauss_2f1", "get_representation", "list_representations",
    "log_gamma", "pde_residual", "pochhammer", "roc_contains", "single_sum_f2",
]
