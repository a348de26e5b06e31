"""Scalar special functions: log-gamma, gamma ratios, Pochhammer symbols, Gauss 2F1."""

import cmath
import math

import pytest
from hypothesis import given, strategies as st
from scipy import special as sp

from appellf2 import LogarithmicCaseError, PoleError, gamma_ratio, gauss_2f1, log_gamma, pochhammer

# [DERIVED] mpmath at 40 digits, frozen
LOGGAMMA_REFS = [
    (0.5, 0.5723649429247001),
    (3.7, 1.428072326665388),
    (1.5 - 2.25j, -1.7803222974320714 - 0.9454686408350308j),
    (0.01 + 30j, -47.87153708922052 + 71.2636183693466j),
    (-12.6 - 3.1j, -29.054762682769166 + 33.15059438191037j),
]

# [DERIVED] mpmath hyp2f1, values on the cut z > 1 taken at z - i0
HYP2F1_REFS = [
    ((0.5, 1.5, 2.25, 0.3), 1.1219263275973996),
    ((1.2, -0.7, 3.1, -4.5), 1.9922692510648676),
    ((2.3, 1.1, 0.6, 0.8), 183.76654604805657),
    ((0.3, 0.9, 1.7, 1.0), 1.5591027277878422),
    ((1.25, 0.4, 2.6, 1.6), 1.3712306427702965 - 0.688981587560008j),
    ((0.7, 1.3, 2.2, 3.5), -0.017378806740319035 - 0.9815009755429495j),
    ((1 + 0.5j, -1.5, 2.75, 12.0), 5.9276816512873225 - 7.365012461123658j),
    ((0.4, 0.8, 1.3, -30.0), 0.3541814956336087),
]

# [DERIVED] mpmath gamma products
GAMMA_RATIO_REFS = [
    (([2.5, 0.3], [1.7]), 4.376671756958207),
    (([1 + 2j], [-0.5 + 1j, 3.2]), -0.13569111083208354 + 0.0030528426700237882j),
    (([-1.5], [0.25, 4.0]), 0.10863789638299154),
]


def close(u, v, tol):
    return abs(u - v) <= tol * max(abs(v), 1e-300)


def same_log(u, v, tol=1e-12):
    """Logarithms equal modulo 2*pi*i."""
    d = u - v
    k = round(d.imag / (2 * math.pi))
    return abs(d - 2j * math.pi * k) <= tol * max(1.0, abs(v))


# -- log-gamma ---------------------------------------------------------------


def test_log_gamma_integer():
    assert log_gamma(5) == pytest.approx(math.log(24), rel=1e-14)


def test_log_gamma_half():
    assert log_gamma(0.5).real == pytest.approx(0.5723649429247001, rel=1e-14)


@pytest.mark.parametrize("z", [0, -1, -7, -3.0 + 1e-12j])
def test_log_gamma_pole(z):
    with pytest.raises(PoleError):
        log_gamma(z)


@pytest.mark.parametrize("z, ref", LOGGAMMA_REFS)
def test_log_gamma_frozen(z, ref):
    assert same_log(log_gamma(z), complex(ref))


def test_log_gamma_negative_real():
    # Gamma(-2.5) < 0, so only the real part is branch free
    assert log_gamma(-2.5).real == pytest.approx(-0.056243716497674054, rel=1e-13)
    assert abs(abs(log_gamma(-2.5).imag) - math.pi) < 1e-12


def test_log_gamma_reflection_side():
    assert log_gamma(-4.3 + 0.7j).real == pytest.approx(-3.954051096133073, rel=1e-13)


def test_log_gamma_principal_imag():
    for z in (0.01 + 30j, -12.6 - 3.1j, 50 - 80j):
        assert -math.pi < log_gamma(z).imag <= math.pi


@given(st.floats(0.05, 40.0))
def test_log_gamma_matches_lgamma(x):
    assert log_gamma(x).real == pytest.approx(math.lgamma(x), rel=1e-12, abs=1e-13)


@given(st.complex_numbers(min_magnitude=0.1, max_magnitude=30.0, allow_nan=False, allow_infinity=False))
def test_log_gamma_recurrence(z):
    if min(abs(z - k) for k in range(0, -40, -1)) < 1e-3 or abs(z + 1) < 1e-3:
        return
    assert same_log(log_gamma(z + 1), log_gamma(z) + cmath.log(z), tol=1e-11)


# -- gamma ratio -------------------------------------------------------------


def test_gamma_ratio_integers():
    assert gamma_ratio([5], [3]) == pytest.approx(12.0, rel=1e-14)


def test_gamma_ratio_denominator_pole():
    assert gamma_ratio([2.5], [-1]) == 0


def test_gamma_ratio_numerator_pole():
    with pytest.raises(LogarithmicCaseError):
        gamma_ratio([-2], [3])


def test_gamma_ratio_balanced_poles():
    # Gamma(-2+e)/Gamma(-3+e) -> -3 as e -> 0
    assert gamma_ratio([-2], [-3]) == pytest.approx(-3.0, rel=1e-13)
    eps = 1e-7
    assert gamma_ratio([-2 + eps], [-3 + eps]) == pytest.approx(-3.0 + eps, rel=1e-6)


@pytest.mark.parametrize("args, ref", GAMMA_RATIO_REFS)
def test_gamma_ratio_frozen(args, ref):
    assert close(gamma_ratio(*args), complex(ref), 1e-13)


@given(st.floats(-20.0, 20.0), st.floats(-20.0, 20.0))
def test_gamma_ratio_shift(re, im):
    z = complex(re, im)
    if abs(z.imag) < 1e-3 and abs(z.real - round(z.real)) < 1e-3 and z.real < 0.5:
        return
    assert close(gamma_ratio([z + 1], [z]), z, 1e-11)


@given(st.lists(st.floats(0.1, 15.0), min_size=1, max_size=3),
       st.lists(st.floats(0.1, 15.0), min_size=0, max_size=3))
def test_gamma_ratio_against_scipy(num, den):
    ref = math.prod(sp.gamma(v) for v in num) / math.prod(sp.gamma(v) for v in den)
    assert close(gamma_ratio(num, den), ref, 1e-12)


# -- Pochhammer --------------------------------------------------------------


def test_pochhammer_examples():
    assert pochhammer(2, 3) == 24
    assert pochhammer(0.37 - 2j, 0) == 1
    assert pochhammer(0.5, -2) == pytest.approx(4 / 3, rel=1e-15)


def test_pochhammer_negative_pole():
    with pytest.raises(PoleError):
        pochhammer(1, -1)


@given(st.complex_numbers(max_magnitude=20.0, allow_nan=False, allow_infinity=False),
       st.integers(0, 30))
def test_pochhammer_recurrence(z, k):
    lhs = pochhammer(z, k + 1)
    rhs = pochhammer(z, k) * (z + k)
    assert abs(lhs - rhs) <= 1e-12 * max(abs(lhs), 1e-300)


@given(st.floats(0.1, 10.0), st.integers(0, 25))
def test_pochhammer_gamma_form(x, k):
    assert close(pochhammer(x, k), sp.poch(x, k), 1e-12)


# -- Gauss 2F1 ---------------------------------------------------------------


def test_2f1_at_zero():
    assert gauss_2f1(0.3 + 1j, -2.7, 1.9, 0.0) == 1


def test_2f1_log_closed_form():
    assert gauss_2f1(1, 1, 2, 0.5).real == pytest.approx(1.3862943611198906, rel=1e-13)


@pytest.mark.parametrize("z", [-40.0, -2.0, 0.6, 0.9, 0.99])
def test_2f1_log_case(z):
    # c-a-b = 0 at the centre of the continuation around z = 1
    assert gauss_2f1(1, 1, 2, z).real == pytest.approx(-math.log1p(-z) / z, rel=1e-12)


def test_2f1_log_case_above_cut():
    # -ln(1-z)/z at z - i0 for z = 3, where 1 - z = -2 + i0
    ref = -(math.log(2.0) + 1j * math.pi) / 3.0
    assert close(gauss_2f1(1, 1, 2, 3.0), ref, 1e-12)


def test_2f1_terminating():
    assert gauss_2f1(-2, 1, 1, 3.0) == pytest.approx(4.0, rel=1e-13)


def test_2f1_lower_pole():
    with pytest.raises(PoleError):
        gauss_2f1(0.5, 0.5, -3, 0.2)


@pytest.mark.parametrize("args, ref", HYP2F1_REFS)
def test_2f1_frozen(args, ref):
    assert close(gauss_2f1(*args), complex(ref), 1e-11)


@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0.2, 5), st.floats(-0.9, 0.9))
def test_2f1_symmetric(a, b, c, z):
    u, v = gauss_2f1(a, b, c, z), gauss_2f1(b, a, c, z)
    assert abs(u - v) <= 1e-12 * max(abs(u), 1.0)


@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0.2, 5), st.floats(-5.0, 0.45))
def test_2f1_euler_relation(a, b, c, z):
    # 2F1(a,b;c;z) = (1-z)^(c-a-b) 2F1(c-a,c-b;c;z)
    lhs = gauss_2f1(a, b, c, z)
    rhs = (1 - z) ** (c - a - b) * gauss_2f1(c - a, c - b, c, z)
    assert abs(lhs - rhs) <= 1e-9 * max(abs(lhs), abs(rhs), 1.0)


@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0.2, 5), st.floats(-8.0, 0.95))
def test_2f1_against_scipy(a, b, c, z):
    ref = sp.hyp2f1(a, b, c, z)
    if not math.isfinite(ref) or abs(ref) > 1e12:
        return
    got = gauss_2f1(a, b, c, z)
    assert abs(got.imag) <= 1e-9 * max(abs(got), 1.0)
    assert abs(got.real - ref) <= 1e-8 * max(abs(ref), 1.0)
