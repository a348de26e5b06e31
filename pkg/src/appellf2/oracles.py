"""Independent reference evaluations of F2.

None of these share code with the series catalog: the brute-force sum builds
every term from explicit Pochhammer products, the single-sum form nests Gauss
functions, the quadrature integrates the one-dimensional Euler integral and
the PDE residual checks the differential system satisfied by F2.
"""

from __future__ import annotations

import cmath
import enum
import math
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import integrate

from .catalog import CATALOG
from .errors import AppellF2Error, DomainError, NonConvergenceError, StencilDomainError
from .evaluator import evaluate_with
from .params import EPS_SING, EvalPoint, ParameterSet
from .special import gamma_ratio, gauss_2f1, pochhammer


_EPS = 2.220446049250313e-16


class OracleMethod(enum.Enum):
    BRUTE_FORCE = "BruteForce"
    SINGLE_SUM = "SingleSum"
    EULER_QUAD = "EulerQuad"


@dataclass(frozen=True)
class OracleResult:
    value: Optional[complex]
    method: OracleMethod
    domain_ok: bool
    estimated_accuracy: float

    def __post_init__(self):
        if not self.domain_ok and self.value is not None:
            raise ValueError("an out-of-domain oracle result carries no value")


def _poch_quotient(u: complex, l: complex, k: int) -> complex:
    """(u)_k / (l)_k as one explicit product, free of intermediate overflow."""
    if k < 60:
        return pochhammer(u, k) / pochhammer(l, k)
    q = 1.0 + 0j
    for j in range(k):
        q *= (u + j) / (l + j)
    return q


def brute_force_f2(params: ParameterSet, point: EvalPoint, terms: int = 200) -> OracleResult:
    """Plain T x T double sum of the defining series."""
    x, y = point.x, point.y
    if abs(x) + abs(y) >= 1.0:
        raise DomainError("the defining double series needs |x| + |y| < 1")
    a, b1, b2, c1, c2 = params.as_tuple()
    T = terms
    # term(m, n) = [(a)_{m+n} / (m+n)!] * C(m+n, m) * (b1)_m/(c1)_m * (b2)_n/(c2)_n * x^m y^n
    A = np.array([_poch_quotient(a, 1.0, k) for k in range(2 * T - 1)], dtype=complex)
    B1 = np.array([_poch_quotient(b1, c1, m) * x**m for m in range(T)], dtype=complex)
    B2 = np.array([_poch_quotient(b2, c2, n) * y**n for n in range(T)], dtype=complex)
    idx = np.arange(T)
    k = idx[:, None] + idx[None, :]
    binom = np.array(
        [[math.comb(m + n, m) for n in range(T)] for m in range(T)], dtype=float
    )
    terms_grid = A[k] * binom * B1[:, None] * B2[None, :]
    value = complex(terms_grid.sum())
    mag = np.abs(terms_grid)
    ring = max(float(mag[-1, :].max()), float(mag[:, -1].max()))
    # rounding in a sum of large alternating terms dominates when terms dwarf the result
    roundoff = _EPS * float(mag.sum())
    return OracleResult(value, OracleMethod.BRUTE_FORCE, True, ring + roundoff)


def single_sum_f2(params: ParameterSet, point: EvalPoint, terms: int = 200) -> OracleResult:
    """Outer sum over m of Gauss functions 2F1(a+m, b2; c2; y)."""
    x, y = point.x, point.y
    if not abs(x) < min(1.0, abs(1.0 - y)):
        raise DomainError("single-sum form needs |x| < min(1, |1-y|)")
    if abs(y - 1.0) < 1e-3:
        raise DomainError("inner Gauss function too close to its singular point y = 1")
    a, b1, b2, c1, c2 = params.as_tuple()
    total = 0j
    coeff = 1.0 + 0j
    last = 0.0
    size = 0.0
    for m in range(terms):
        if m:
            coeff *= (a + m - 1) * (b1 + m - 1) / ((c1 + m - 1) * m) * x
        if coeff == 0:
            break
        term = coeff * gauss_2f1(a + m, b2, c2, y)
        total += term
        last = abs(term)
        size += last
    return OracleResult(total, OracleMethod.SINGLE_SUM, True, last + _EPS * size)


def euler_quad_f2(params: ParameterSet, point: EvalPoint) -> OracleResult:
    """One-dimensional Euler integral in v with 2F1(a, b1; c1; x/(1-vy)) inside.

    Endpoint singularities are removed by v = u**(1/Re b2) on [0, 1/2] and
    1 - v = w**(1/Re(c2-b2)) on [1/2, 1].
    """
    a, b1, b2, c1, c2 = params.as_tuple()
    x, y = point.x, point.y
    beta = b2.real
    gamma = (c2 - b2).real
    if beta <= 0 or gamma <= 0:
        raise DomainError("Euler integral needs Re(b2) > 0 and Re(c2-b2) > 0")
    if not (y < 1.0 and x < 1.0 and x + y < 1.0):
        raise DomainError("x/(1-vy) would reach the cut [1, inf) on the integration path")

    def core(v: float, w: float) -> complex:
        s = 1.0 - v * y
        return s ** (-a) * gauss_2f1(a, b1, c1, x / s)

    def left(u: float) -> complex:
        if u == 0.0:
            v = 0.0
            jac = cmath.exp(0j) / beta
        else:
            v = u ** (1.0 / beta)
            jac = cmath.exp(1j * b2.imag / beta * math.log(u)) / beta
        return jac * (1.0 - v) ** (c2 - b2 - 1.0) * core(v, 1.0 - v)

    def right(s: float) -> complex:
        if s == 0.0:
            w = 0.0
            jac = 1.0 / gamma
        else:
            w = s ** (1.0 / gamma)
            jac = cmath.exp(1j * (c2 - b2).imag / gamma * math.log(s)) / gamma
        v = 1.0 - w
        return jac * v ** (b2 - 1.0) * core(v, w)

    opts = dict(epsabs=0.0, epsrel=1e-12, limit=200, complex_func=True, full_output=False)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", integrate.IntegrationWarning)
        i1, e1 = integrate.quad(left, 0.0, 0.5**beta, **opts)
        i2, e2 = integrate.quad(right, 0.0, 0.5**gamma, **opts)
    norm = gamma_ratio([c2], [b2, c2 - b2])
    value = norm * (i1 + i2)
    err = abs(norm) * (abs(e1) + abs(e2))
    # quadpack's own estimate is unreliable once it reports roundoff or divergence
    if any(issubclass(w.category, integrate.IntegrationWarning) for w in caught):
        err = math.inf
    return OracleResult(complex(value), OracleMethod.EULER_QUAD, True, float(err))


# ---------------------------------------------------------------------------
# differential system


def _stencil(point: EvalPoint, h: float) -> list[EvalPoint]:
    return [EvalPoint(point.x + i * h, point.y + j * h) for i in (-1, 0, 1) for j in (-1, 0, 1)]


def stencil_representation(
    params: ParameterSet, point: EvalPoint, h: float, terms: int = 150
) -> str:
    """Most accurate representation whose ROC holds the whole 9-point stencil.

    Accuracy is judged by the relative error estimate at the centre, which is
    what the second differences amplify by 1/h**2.
    """
    pts = _stencil(point, h)
    for p in pts:
        if p.singular_curves(max(EPS_SING, 1.5 * h)):
            raise StencilDomainError(
                f"stencil around ({point.x:g}, {point.y:g}) touches a singular curve"
            )
    best = None
    for rep in CATALOG:
        if not all(rep.contains(p) for p in pts):
            continue
        try:
            r = evaluate_with(rep.id, params, point, precision=15, terms=terms)
        except AppellF2Error:
            continue
        rel = r.error_estimate / abs(r.value) if r.value != 0 else math.inf
        if best is None or rel < best[0]:
            best = (rel, rep.id)
    if best is None:
        raise StencilDomainError(
            f"no single representation covers the stencil around ({point.x:g}, {point.y:g})"
        )
    if best[0] > 1e-5 * h * h:
        raise NonConvergenceError(
            f"best stencil representation {best[1]} is only accurate to {best[0]:.2g}, "
            f"too coarse for differences with h = {h:g}"
        )
    return best[1]


def pde_residual(
    params: ParameterSet, point: EvalPoint, h: float = 1e-3, terms: int = 150
) -> tuple[float, float]:
    """Both residuals of the F2 differential system, each normalized by its largest term.

    Derivatives are central differences of order h**2 on a 3x3 stencil summed
    with one fixed representation.
    """
    rep_id = stencil_representation(params, point, h, terms)
    f = {}
    for i in (-1, 0, 1):
        for j in (-1, 0, 1):
            p = EvalPoint(point.x + i * h, point.y + j * h)
            f[i, j] = evaluate_with(rep_id, params, p, precision=15, terms=terms).value
    z = f[0, 0]
    p_ = (f[1, 0] - f[-1, 0]) / (2 * h)
    q_ = (f[0, 1] - f[0, -1]) / (2 * h)
    r_ = (f[1, 0] - 2 * z + f[-1, 0]) / h**2
    t_ = (f[0, 1] - 2 * z + f[0, -1]) / h**2
    s_ = (f[1, 1] - f[1, -1] - f[-1, 1] + f[-1, -1]) / (4 * h * h)
    a, b1, b2, c1, c2 = params.as_tuple()
    x, y = point.x, point.y
    eq1 = [x * (1 - x) * r_, -x * y * s_, (c1 - (a + b1 + 1) * x) * p_, -b1 * y * q_, -a * b1 * z]
    eq2 = [y * (1 - y) * t_, -x * y * s_, (c2 - (a + b2 + 1) * y) * q_, -b2 * x * p_, -a * b2 * z]

    def norm(terms_):
        scale = max(abs(t) for t in terms_)
        return abs(sum(terms_)) / scale if scale > 0 else 0.0

    return norm(eq1), norm(eq2)
