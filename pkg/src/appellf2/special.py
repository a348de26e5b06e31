"""Complex scalar special functions: log-gamma, gamma ratios, Pochhammer symbols, Gauss 2F1.

Everything here works on Python ``complex`` scalars.  The Gauss function is
only needed for real arguments; on the cut ``z > 1`` it returns the limit
``z - i0`` (principal powers in the continuation formulas), which is the
branch convention used throughout the package.
"""

from __future__ import annotations

import cmath
import math
from typing import Sequence

from .errors import DomainError, LogarithmicCaseError, PoleError
from .params import EPS_POLE, is_nonpositive_integer

_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)
_TWO_PI = 2.0 * math.pi

_SERIES_TOL = 1e-17
_SERIES_MAX_TERMS = 20000


def _principal(w: complex) -> complex:
    im = math.remainder(w.imag, _TWO_PI)
    if im <= -math.pi:
        im += _TWO_PI
    return complex(w.real, im)


def _log_gamma_right(z: complex) -> complex:
    z = z - 1.0
    s = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        s += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(s)


def _log_gamma_raw(z: complex) -> complex:
    if z.real >= 0.5:
        return _log_gamma_right(z)
    n = round(z.real)
    # sin(pi z) evaluated after removing the integer part keeps relative accuracy near poles
    s = cmath.sin(math.pi * (z - n))
    if n % 2:
        s = -s
    return _LOG_PI - cmath.log(s) - _log_gamma_right(1.0 - z)


def log_gamma(z: complex, eps: float = EPS_POLE) -> complex:
    """Logarithm of Gamma(z), imaginary part reduced to (-pi, pi].

    Lanczos approximation (g=7, 9 coefficients), reflection for Re z < 1/2.
    """
    z = complex(z)
    if is_nonpositive_integer(z, eps):
        raise PoleError(f"Gamma has a pole at {z}")
    return _principal(_log_gamma_raw(z))


def _pole_residue(z: complex) -> tuple[complex, complex]:
    """(log of residue of Gamma at the nearby pole, offset from that pole)."""
    n = -round(z.real)
    log_res = -math.lgamma(n + 1) + (1j * math.pi if n % 2 else 0.0)
    return log_res, z + n


def gamma_ratio(
    numerators: Sequence[complex], denominators: Sequence[complex], eps: float = EPS_POLE
) -> complex:
    """prod Gamma(numerators) / prod Gamma(denominators), computed in log space.

    A denominator pole with no matching numerator pole gives exactly 0.
    Unmatched numerator poles are a logarithmic case.  When poles balance,
    each pole is replaced by its residue and the pole offsets are divided out
    (offsets that are exactly zero are taken as equal).
    """
    num_poles = [complex(z) for z in numerators if is_nonpositive_integer(z, eps)]
    den_poles = [complex(z) for z in denominators if is_nonpositive_integer(z, eps)]
    if len(num_poles) > len(den_poles):
        raise LogarithmicCaseError(
            f"Gamma numerator pole at {num_poles[0]} is not cancelled (logarithmic case)"
        )
    if len(num_poles) < len(den_poles):
        return 0j

    log_total = 0j
    for z in numerators:
        if not is_nonpositive_integer(z, eps):
            log_total += _log_gamma_raw(complex(z))
    for z in denominators:
        if not is_nonpositive_integer(z, eps):
            log_total -= _log_gamma_raw(complex(z))

    offset_ratio = 1.0 + 0j
    if num_poles:
        num_offsets, den_offsets = [], []
        for z in num_poles:
            lr, d = _pole_residue(z)
            log_total += lr
            num_offsets.append(d)
        for z in den_poles:
            lr, d = _pole_residue(z)
            log_total -= lr
            den_offsets.append(d)
        if all(d != 0 for d in num_offsets + den_offsets):
            for d in den_offsets:
                offset_ratio *= d
            for d in num_offsets:
                offset_ratio /= d
    return cmath.exp(_principal(log_total)) * offset_ratio


def pochhammer(z: complex, k: int) -> complex:
    """Rising factorial (z)_k for any integer k; (z)_{-k} = 1/(z-k)_k."""
    z = complex(z)
    if k == 0:
        return 1.0 + 0j
    if k > 0:
        p = 1.0 + 0j
        for j in range(k):
            p *= z + j
        return p
    d = pochhammer(z + k, -k)
    if d == 0:
        raise PoleError(f"({z})_{k} is infinite")
    return 1.0 / d


# ---------------------------------------------------------------------------
# Gauss 2F1 for real argument


def _direct_series(a: complex, b: complex, c: complex, z: float) -> complex:
    term = 1.0 + 0j
    total = 1.0 + 0j
    for k in range(_SERIES_MAX_TERMS):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
        if term == 0:
            return total
        if abs(term) <= _SERIES_TOL * abs(total) and abs(term) < 1e-300 + abs(total) * 1e-16:
            # make sure the terms are past their peak before stopping
            nxt = abs((a + k + 1) * (b + k + 1) / ((c + k + 1) * (k + 2)) * z)
            if nxt < 1.0:
                return total
    raise DomainError(f"2F1({a}, {b}; {c}; {z}) series did not converge")


def _polynomial(a: complex, b: complex, c: complex, z: float, n: int) -> complex:
    term = 1.0 + 0j
    total = 1.0 + 0j
    for k in range(n):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
    return total


def _cpow(base: float, exponent: complex) -> complex:
    """Principal power of a real base (negative bases take arg = +pi)."""
    if exponent == 0:
        return 1.0 + 0j
    if base == 0:
        if exponent.real > 0:
            return 0j
        raise DomainError("zero raised to a power with non-positive real part")
    return cmath.exp(exponent * cmath.log(complex(base)))


# connection formulas lose about -log10(d) digits when the exponent difference is within d
# of an integer; there 2F1 is averaged over a circle in a instead (exact for entire functions,
# geometric convergence of the trapezoid rule)
_NEAR_INT = 0.025
_CIRCLE_RADIUS = 0.06
_CIRCLE_POINTS = 16


def _int_distance(w: complex) -> float:
    return abs(w - round(w.real))


def _circle_mean(a: complex, b: complex, c: complex, z: float, depth: int) -> complex:
    total = 0j
    for k in range(_CIRCLE_POINTS):
        shift = _CIRCLE_RADIUS * cmath.exp(2j * math.pi * (k + 0.5) / _CIRCLE_POINTS)
        total += _hyp2f1(a + shift, b, c, z, depth + 1)
    return total / _CIRCLE_POINTS


def _hyp2f1(a: complex, b: complex, c: complex, z: float, depth: int = 0) -> complex:
    if depth > 6:
        raise RuntimeError("2F1 argument mapping did not terminate")
    for p in (a, b):
        if is_nonpositive_integer(p):
            return _polynomial(a, b, c, z, -round(p.real))
    if z == 0.0:
        return 1.0 + 0j
    if z < 0.0:
        # Pfaff keeps the parameter with the larger real part so the mapped series has no cancellation
        if a.real < b.real:
            a, b = b, a
        w = z / (z - 1.0)
        return _cpow(1.0 - z, -a) * _hyp2f1(a, c - b, c, w, depth + 1)
    if z <= 0.5:
        return _direct_series(a, b, c, z)
    if z == 1.0:
        if (c - a - b).real <= 0:
            raise DomainError("2F1 diverges at z=1 when Re(c-a-b) <= 0")
        return gamma_ratio([c, c - a - b], [c - a, c - b])
    if z < 1.0 or z <= 2.0:
        if _int_distance(c - a - b) < _NEAR_INT:
            return _circle_mean(a, b, c, z, depth)
        w = 1.0 - z
        g1 = gamma_ratio([c, c - a - b], [c - a, c - b])
        g2 = gamma_ratio([c, a + b - c], [a, b])
        out = 0j
        if g1 != 0:
            out += g1 * _hyp2f1(a, b, a + b - c + 1.0, w, depth + 1)
        if g2 != 0:
            out += g2 * _cpow(w, c - a - b) * _hyp2f1(c - a, c - b, c - a - b + 1.0, w, depth + 1)
        return out
    if _int_distance(a - b) < _NEAR_INT:
        return _circle_mean(a, b, c, z, depth)
    w = 1.0 / z
    g1 = gamma_ratio([c, b - a], [b, c - a])
    g2 = gamma_ratio([c, a - b], [a, c - b])
    out = 0j
    if g1 != 0:
        out += g1 * _cpow(-z, -a) * _hyp2f1(a, a - c + 1.0, a - b + 1.0, w, depth + 1)
    if g2 != 0:
        out += g2 * _cpow(-z, -b) * _hyp2f1(b, b - c + 1.0, b - a + 1.0, w, depth + 1)
    return out


def gauss_2f1(a: complex, b: complex, c: complex, z: float) -> complex:
    """Gauss hypergeometric function 2F1(a, b; c; z) for real z.

    Negative z goes through the Pfaff transformation, z in (1/2, 2] through
    the continuation around z=1 and z > 2 through the continuation at
    infinity; every route ends in a direct series with argument <= 1/2.
    For z > 1 the value is the limit from below the cut.
    """
    a, b, c = complex(a), complex(b), complex(c)
    z = float(z)
    if is_nonpositive_integer(c):
        raise PoleError(f"2F1 lower parameter c = {c} is a non-positive integer")
    # argument symmetry holds by construction
    if (a.real, a.imag) > (b.real, b.imag):
        a, b = b, a
    out = _hyp2f1(a, b, c, z)
    if z <= 1.0 and a.imag == 0 and b.imag == 0 and c.imag == 0:
        return complex(out.real, 0.0)
    return out
