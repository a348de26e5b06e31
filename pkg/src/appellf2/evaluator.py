"""Selection of the fastest converging representation and its evaluation."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

from .catalog import (
    CATALOG,
    InstantiatedComponent,
    arg_value,
    get_representation,
    instantiate,
)
from .errors import (
    LogarithmicCaseError,
    NonConvergenceError,
    NoValidSeriesError,
    OutOfROCError,
    SeriesOverflowError,
)
from .params import EPS_SING, EvalPoint, ParameterSet
from .series import rate_probe, sum_double_series

_MACHINE_EPS = 2.220446049250313e-16
_COEFF_REL_ERR = 1e-14


@dataclass(frozen=True)
class Candidate:
    id: str
    package_number: int
    rate: float


@dataclass(frozen=True)
class EvaluationReport:
    value: complex
    chosen: str
    candidates: tuple[Candidate, ...]
    terms: int
    error_estimate: float
    digits: int
    precision: int
    component_values: tuple[complex, ...] = field(default=(), compare=False)

    @property
    def package_number(self) -> int:
        return get_representation(self.chosen).package_number

    def display(self) -> str:
        return format_complex(self.value, self.precision)

    def to_dict(self) -> dict:
        return {
            "value": [self.value.real, self.value.imag],
            "chosen": self.chosen,
            "package_number": self.package_number,
            "candidates": [asdict(c) for c in self.candidates],
            "terms": self.terms,
            "error_estimate": self.error_estimate,
            "digits": self.digits,
            "precision": self.precision,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "EvaluationReport":
        return cls(
            value=complex(d["value"][0], d["value"][1]),
            chosen=d["chosen"],
            candidates=tuple(Candidate(**c) for c in d["candidates"]),
            terms=d["terms"],
            error_estimate=d["error_estimate"],
            digits=d["digits"],
            precision=d["precision"],
        )


def format_complex(z: complex, digits: int) -> str:
    """``"re - im I"`` with ``digits`` significant digits per part."""
    re = f"{z.real:.{digits}g}"
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    im = f"{abs(z.imag):.{digits}g}"
    return f"{re} {sign} {im} I"


def find_all(point: EvalPoint, eps_sing: float = EPS_SING) -> list[str]:
    """Ids of every representation whose ROC contains the point, in catalog order."""
    point.check_regular(eps_sing)
    return [r.id for r in CATALOG if r.contains(point)]


def _component_args(rep_id: str, point: EvalPoint):
    rep = get_representation(rep_id)
    return [(c.series, arg_value(c.arg_x, point), arg_value(c.arg_y, point)) for c in rep.components]


def convergence_rate(rep_id, params: ParameterSet, point: EvalPoint) -> float:
    """max over components of sqrt(s^2 + t^2), with (s, t) the term ratios at m = n = 100."""
    rep = get_representation(rep_id)
    if not rep.contains(point):
        raise OutOfROCError(f"({point.x:g}, {point.y:g}) is outside the ROC of {rep.id}")
    rate = 0.0
    for spec, X, Y in _component_args(rep.id, point):
        s, t = rate_probe(spec, params, X, Y)
        rate = max(rate, math.hypot(s, t))
    return rate


def _sum(parts: list[InstantiatedComponent], params: ParameterSet, terms: int):
    value = 0j
    trunc = 0.0
    noise = 0.0
    values = []
    for part in parts:
        if part.coefficient == 0:
            values.append(0j)
            continue
        res = sum_double_series(part.series, params, part.X, part.Y, terms)
        v = part.coefficient * res.value
        values.append(v)
        value += v
        scale = abs(part.coefficient)
        trunc += scale * max(res.error_estimate, res.tail_estimate)
        noise += scale * _MACHINE_EPS * terms * res.max_term_magnitude
        # gamma coefficients carry roughly 1e-14 relative error
        noise += _COEFF_REL_ERR * abs(v)
    return value, trunc, noise, tuple(values)


def _digits(value: complex, err: float, precision: int) -> int:
    if value == 0:
        return 0 if err > 0 else precision
    if err == 0:
        return precision
    return max(0, min(precision, int(math.floor(-math.log10(err / abs(value))))))


def _tolerance(value: complex, precision: int) -> float:
    return 0.5 * 10.0 ** (1 - precision) * abs(value)


def _report(rep_id, params, point, precision, terms, candidates) -> EvaluationReport:
    parts = instantiate(rep_id, params, point)
    value, trunc, noise, values = _sum(parts, params, terms)
    err = trunc + noise
    rate = next((c.rate for c in candidates if c.id == rep_id), None)
    # only the truncation part signals non-convergence; rounding noise is reported through digits
    if rate is not None and rate >= 1.0 and trunc > _tolerance(value, precision):
        raise NonConvergenceError(
            f"{rep_id} has convergence rate {rate:.3g} >= 1 and truncation estimate {trunc:.3g} "
            f"for |value| = {abs(value):.3g} after {terms} terms"
        )
    return EvaluationReport(
        value=value, chosen=rep_id, candidates=tuple(candidates), terms=terms,
        error_estimate=err, digits=_digits(value, err, precision), precision=precision,
        component_values=values,
    )


def _check_inputs(params: ParameterSet, precision: int, terms: int) -> None:
    params.validate()
    if not 1 <= precision <= 15:
        raise ValueError("precision must be between 1 and 15")
    if terms < 1:
        raise ValueError("terms must be >= 1")


def rank_candidates(params: ParameterSet, point: EvalPoint, eps_sing: float = EPS_SING):
    """Valid representations sorted by convergence rate (ties keep catalog order)."""
    ids = find_all(point, eps_sing)
    if not ids:
        raise NoValidSeriesError(
            f"no representation converges at ({point.x:g}, {point.y:g})"
        )
    ranked = []
    for rep_id in ids:
        try:
            rate = convergence_rate(rep_id, params, point)
        except LogarithmicCaseError:
            continue
        ranked.append(Candidate(rep_id, get_representation(rep_id).package_number, rate))
    # stable sort: equal rates stay in catalog order
    ranked.sort(key=lambda c: c.rate)
    return ranked


def _relative_error(rep: EvaluationReport) -> float:
    return rep.error_estimate / abs(rep.value) if rep.value != 0 else math.inf


def evaluate(
    params: ParameterSet,
    point: EvalPoint,
    precision: int = 10,
    terms: int = 100,
    eps_sing: float = EPS_SING,
) -> EvaluationReport:
    """Evaluate F2 with the valid representation of smallest convergence rate.

    Candidates are tried in order of increasing rate and the first whose
    error estimate meets the requested precision is returned.  Candidates
    that degenerate (logarithmic case, overflow) or fail to converge are
    skipped.  When no candidate reaches the precision, the report with the
    smallest relative error estimate is returned; when none produces a
    report at all, the error of the best ranked candidate is raised.
    """
    _check_inputs(params, precision, terms)
    ranked = rank_candidates(params, point, eps_sing)
    first_error: Exception | None = None
    fallback: EvaluationReport | None = None
    for cand in ranked:
        try:
            rep = _report(cand.id, params, point, precision, terms, ranked)
        except (LogarithmicCaseError, SeriesOverflowError, NonConvergenceError) as exc:
            if first_error is None or (
                isinstance(exc, NonConvergenceError) and not isinstance(first_error, NonConvergenceError)
            ):
                first_error = exc
            continue
        if rep.error_estimate <= _tolerance(rep.value, precision):
            return rep
        if fallback is None or _relative_error(rep) < _relative_error(fallback):
            fallback = rep
    if fallback is not None:
        return fallback
    if first_error is None:
        raise LogarithmicCaseError(
            "every valid representation is degenerate for these parameters"
        )
    raise first_error


def evaluate_with(
    rep_id,
    params: ParameterSet,
    point: EvalPoint,
    precision: int = 10,
    terms: int = 100,
    eps_sing: float = EPS_SING,
) -> EvaluationReport:
    """Evaluate with a forced representation."""
    _check_inputs(params, precision, terms)
    point.check_regular(eps_sing)
    rep = get_representation(rep_id)
    if not rep.contains(point):
        raise OutOfROCError(f"({point.x:g}, {point.y:g}) is outside the ROC of {rep.id}")
    rate = convergence_rate(rep.id, params, point)
    cand = Candidate(rep.id, rep.package_number, rate)
    return _report(rep.id, params, point, precision, terms, [cand])


def evaluate_all(
    params: ParameterSet,
    point: EvalPoint,
    terms: int = 100,
    eps_sing: float = EPS_SING,
) -> dict[str, tuple[complex, float] | Exception]:
    """Every valid representation summed at the point: id -> (value, error estimate) or the error."""
    params.validate()
    out: dict[str, tuple[complex, float] | Exception] = {}
    for rep_id in find_all(point, eps_sing):
        try:
            value, trunc, noise, _ = _sum(instantiate(rep_id, params, point), params, terms)
            out[rep_id] = (value, trunc + noise)
        except (LogarithmicCaseError, SeriesOverflowError) as exc:
            out[rep_id] = exc
    return out
