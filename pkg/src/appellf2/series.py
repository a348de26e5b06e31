"""Rectangular summation of double hypergeometric series.

A series is described by Pochhammer bases grouped by the shift they carry
(``m+n``, ``m-n``, ``m`` or ``n``) in the numerator and denominator.  The
general term is

    V(m, n) = prod (u)_{shift} / prod (l)_{shift} / (m! n!) * X**m * Y**n

Terms are produced by recurrence: down the first column with the ratio in
``m`` and then along every row with the ratio in ``n``.  Factors that vanish
(terminating series, or a lower base hitting a non-positive integer) are
tracked as integer orders so that exact zeros and genuine poles can be told
apart instead of turning into 0/0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import LogarithmicCaseError, SeriesOverflowError, ZeroTermError
from .params import EPS_POLE, Lin, ParameterSet
from .special import pochhammer

OVERFLOW_LIMIT = 1e300
PROBE_INDEX = 100


@dataclass(frozen=True)
class DoubleSeriesSpec:
    upper_plus: tuple[Lin, ...] = ()
    upper_minus: tuple[Lin, ...] = ()
    upper_m: tuple[Lin, ...] = ()
    upper_n: tuple[Lin, ...] = ()
    lower_plus: tuple[Lin, ...] = ()
    lower_minus: tuple[Lin, ...] = ()
    lower_m: tuple[Lin, ...] = ()
    lower_n: tuple[Lin, ...] = ()
    label: str = field(default="", compare=False)

    @property
    def is_mirror(self) -> bool:
        """True when some base carries the shift ``m-n``."""
        return bool(self.upper_minus or self.lower_minus)

    def values(self, params: ParameterSet) -> "_Bases":
        def ev(group):
            return np.array([c(params) for c in group], dtype=complex)

        return _Bases(
            ev(self.upper_plus), ev(self.upper_minus), ev(self.upper_m), ev(self.upper_n),
            ev(self.lower_plus), ev(self.lower_minus), ev(self.lower_m), ev(self.lower_n),
        )


@dataclass(frozen=True)
class _Bases:
    up: np.ndarray
    umi: np.ndarray
    um: np.ndarray
    un: np.ndarray
    lp: np.ndarray
    lmi: np.ndarray
    lm: np.ndarray
    ln: np.ndarray


@dataclass(frozen=True)
class PartialSumResult:
    value: complex
    error_estimate: float
    terms_per_index: int
    max_term_magnitude: float
    # geometric extrapolation of the remainder from the last two rings
    tail_estimate: float = 0.0


def _factor_product(factors: list[np.ndarray], eps: float) -> tuple[np.ndarray, np.ndarray]:
    """Product of broadcastable factor arrays with vanishing factors counted instead of multiplied."""
    value = None
    order = None
    for f in factors:
        zero = np.abs(f) <= eps
        f = np.where(zero, 1.0, f)
        value = f if value is None else value * f
        z = zero.astype(np.int64)
        order = z if order is None else order + z
    return value, order


def _ratio_parts(
    num: list[np.ndarray], den: list[np.ndarray], eps: float
) -> tuple[np.ndarray, np.ndarray]:
    nv, no = _factor_product(num, eps)
    dv, do = _factor_product(den, eps)
    return nv / dv, no - do


def term_grid(
    spec: DoubleSeriesSpec,
    params: ParameterSet,
    X: complex,
    Y: complex,
    terms: int,
    eps: float = EPS_POLE,
) -> np.ndarray:
    """Array ``V[m, n]`` for ``0 <= m, n < terms`` built by recurrences."""
    if terms < 1:
        raise ValueError("terms must be >= 1")
    T = terms
    b = spec.values(params)
    X = complex(X)
    Y = complex(Y)

    m = np.arange(T - 1, dtype=float)
    # m -> m+1 along n = 0
    num = [u + m for u in (*b.up, *b.umi, *b.um)] or [np.ones(T - 1)]
    den = [l + m for l in (*b.lp, *b.lmi, *b.lm)] + [m + 1.0]
    ratio_m, order_m = _ratio_parts(num, den, eps)
    if X != 0:
        ratio_m = ratio_m * X

    first_col = np.ones(T, dtype=complex)
    first_ord = np.zeros(T, dtype=np.int64)
    with np.errstate(over="ignore", invalid="ignore"):
        first_col[1:] = np.cumprod(ratio_m)
    first_ord[1:] = np.cumsum(order_m)

    # n -> n+1 along each row m
    mm = np.arange(T, dtype=float)[:, None]
    nn = np.arange(T - 1, dtype=float)[None, :]

    plus, minus = mm + nn, mm - nn - 1.0
    num = [u + plus for u in b.up] + [u + nn for u in b.un] + [l + minus for l in b.lmi]
    den = [l + plus for l in b.lp] + [l + nn for l in b.ln] + [u + minus for u in b.umi]
    den.append(nn + 1.0)
    shape = (T, T - 1)
    num = [np.broadcast_to(f, shape) for f in num] or [np.ones(shape)]
    den = [np.broadcast_to(f, shape) for f in den]
    ratio_n, order_n = _ratio_parts(num, den, eps)
    if Y != 0:
        ratio_n = ratio_n * Y

    V = np.empty((T, T), dtype=complex)
    order = np.empty((T, T), dtype=np.int64)
    V[:, 0] = first_col
    order[:, 0] = first_ord
    with np.errstate(over="ignore", invalid="ignore"):
        if T > 1:
            V[:, 1:] = first_col[:, None] * np.cumprod(ratio_n, axis=1)
            order[:, 1:] = first_ord[:, None] + np.cumsum(order_n, axis=1)

    if np.any(order < 0):
        mi, ni = np.argwhere(order < 0)[0]
        raise LogarithmicCaseError(
            f"series term ({mi}, {ni}) hits a pole of a lower Pochhammer symbol"
        )
    V = np.where(order > 0, 0.0, V)
    if X == 0:
        V[1:, :] = 0.0
    if Y == 0:
        V[:, 1:] = 0.0
    if not np.all(np.isfinite(V)) or np.max(np.abs(V)) > OVERFLOW_LIMIT:
        raise SeriesOverflowError("series terms exceed the representable range")
    return V


def sum_double_series(
    spec: DoubleSeriesSpec,
    params: ParameterSet,
    X: complex,
    Y: complex,
    terms: int,
    eps: float = EPS_POLE,
) -> PartialSumResult:
    """Sum ``V[m, n]`` over the ``terms x terms`` rectangle.

    The error estimate is the largest term magnitude on the outer ring
    ``m = terms-1`` or ``n = terms-1``.
    """
    V = term_grid(spec, params, X, Y, terms, eps)
    mag = np.abs(V)
    # row-major accumulation; a bigger rectangle restricted to the same indices gives the same bits
    value = complex(np.sum(np.sum(V, axis=1)))
    if not np.isfinite(value) or abs(value) > OVERFLOW_LIMIT:
        raise SeriesOverflowError("partial sum exceeds the representable range")
    ring = max(float(mag[-1, :].max()), float(mag[:, -1].max()))
    return PartialSumResult(value, ring, terms, float(mag.max()), _tail(mag))


def _ring_sum(mag: np.ndarray, k: int) -> float:
    return float(mag[k, : k + 1].sum() + mag[:k, k].sum())


def _tail(mag: np.ndarray) -> float:
    T = mag.shape[0]
    last = _ring_sum(mag, T - 1)
    if T < 3 or last == 0.0:
        return last
    prev = _ring_sum(mag, T - 2)
    if prev == 0.0:
        return last
    q = last / prev
    if q >= 1.0:
        # rings not yet decaying; fall back to a crude bound
        return last * T
    return last * max(1.0, q / (1.0 - q))


# ---------------------------------------------------------------------------
# scalar term access


def _poch_order(u: complex, k: int, eps: float) -> tuple[complex, int]:
    """(u)_k with vanishing factors removed, plus the signed count of removed factors."""
    value = 1.0 + 0j
    order = 0
    if k >= 0:
        for j in range(k):
            f = u + j
            if abs(f) <= eps:
                order += 1
            else:
                value *= f
    else:
        for j in range(1, -k + 1):
            f = u - j
            if abs(f) <= eps:
                order -= 1
            else:
                value /= f
    return value, order


def _term_order(spec: DoubleSeriesSpec, params: ParameterSet, m: int, n: int, eps: float) -> int:
    order = 0
    for group, k, sign in (
        (spec.upper_plus, m + n, 1), (spec.upper_minus, m - n, 1),
        (spec.upper_m, m, 1), (spec.upper_n, n, 1),
        (spec.lower_plus, m + n, -1), (spec.lower_minus, m - n, -1),
        (spec.lower_m, m, -1), (spec.lower_n, n, -1),
    ):
        for c in group:
            order += sign * _poch_order(c(params), k, eps)[1]
    return order


def term_direct(
    spec: DoubleSeriesSpec, params: ParameterSet, X: complex, Y: complex, m: int, n: int
) -> complex:
    """V(m, n) from explicit Pochhammer products (no recurrences)."""
    v = 1.0 + 0j
    for group, k in ((spec.upper_plus, m + n), (spec.upper_minus, m - n),
                     (spec.upper_m, m), (spec.upper_n, n)):
        for c in group:
            v *= pochhammer(c(params), k)
    for group, k in ((spec.lower_plus, m + n), (spec.lower_minus, m - n),
                     (spec.lower_m, m), (spec.lower_n, n)):
        for c in group:
            v /= pochhammer(c(params), k)
    v /= pochhammer(1.0, m) * pochhammer(1.0, n)
    return v * complex(X) ** m * complex(Y) ** n


def _check_nonzero(spec, params, m, n, eps):
    order = _term_order(spec, params, m, n, eps)
    if order > 0:
        raise ZeroTermError(f"term ({m}, {n}) vanishes identically")
    if order < 0:
        raise LogarithmicCaseError(f"term ({m}, {n}) sits on a pole")


def _ratio(num: list[complex], den: list[complex], eps: float) -> complex:
    r = 1.0 + 0j
    for f in num:
        r *= f
    for f in den:
        if abs(f) <= eps:
            raise LogarithmicCaseError("next term sits on a pole")
        r /= f
    return r


def term_ratio_m(
    spec: DoubleSeriesSpec, params: ParameterSet, m: int, n: int, X: complex = 1.0,
    eps: float = EPS_POLE,
) -> complex:
    """V(m+1, n) / V(m, n), argument factor ``X`` included."""
    _check_nonzero(spec, params, m, n, eps)
    num = [c(params) + m + n for c in spec.upper_plus]
    num += [c(params) + m - n for c in spec.upper_minus]
    num += [c(params) + m for c in spec.upper_m]
    den = [c(params) + m + n for c in spec.lower_plus]
    den += [c(params) + m - n for c in spec.lower_minus]
    den += [c(params) + m for c in spec.lower_m]
    den.append(m + 1.0)
    return _ratio(num, den, eps) * complex(X)


def term_ratio_n(
    spec: DoubleSeriesSpec, params: ParameterSet, m: int, n: int, Y: complex = 1.0,
    eps: float = EPS_POLE,
) -> complex:
    """V(m, n+1) / V(m, n), argument factor ``Y`` included."""
    _check_nonzero(spec, params, m, n, eps)
    num = [c(params) + m + n for c in spec.upper_plus]
    num += [c(params) + m - n - 1 for c in spec.lower_minus]
    num += [c(params) + n for c in spec.upper_n]
    den = [c(params) + m + n for c in spec.lower_plus]
    den += [c(params) + m - n - 1 for c in spec.upper_minus]
    den += [c(params) + n for c in spec.lower_n]
    den.append(n + 1.0)
    return _ratio(num, den, eps) * complex(Y)


def rate_probe(
    spec: DoubleSeriesSpec, params: ParameterSet, X: complex, Y: complex,
    index: int = PROBE_INDEX,
) -> tuple[float, float]:
    """(s, t) = (|V(m+1,n)/V(m,n)|, |V(m,n+1)/V(m,n)|) at the probe index.

    Plain series are probed at m = n = index.  For a series with ``m-n``
    bases the diagonal is degenerate: there the ``m-n`` factors of the
    ratio are parameter constants such as (l-1)/(u-1) and say nothing
    about decay.  Those series are probed at (2*index, index) and
    (index, 2*index) instead, keeping the pair with the larger norm.
    A vanishing probe term gives (0, 0).
    """
    if spec.is_mirror:
        points = ((2 * index, index), (index, 2 * index))
    else:
        points = ((index, index),)
    best = (0.0, 0.0)
    for m, n in points:
        try:
            s = abs(term_ratio_m(spec, params, m, n, X))
            t = abs(term_ratio_n(spec, params, m, n, Y))
        except ZeroTermError:
            continue
        if math.hypot(s, t) > math.hypot(*best):
            best = (s, t)
    return best
