"""Independent reference evaluations and the differential-system residual."""

import pytest
from hypothesis import given, settings, strategies as st

from appellf2 import (
    DomainError,
    EvalPoint,
    ParameterSet,
    StencilDomainError,
    brute_force_f2,
    euler_quad_f2,
    evaluate,
    gauss_2f1,
    pde_residual,
    single_sum_f2,
)
from appellf2.oracles import OracleMethod, OracleResult
from sampling import rel_diff

# [DERIVED] mpmath appellf2 at 40 digits, frozen
SERIES_REFS = [
    ((1.5, 0.7, -0.3, 2.2, 1.4), (0.3, -0.4), 1.3288566980831213),
    ((-2.5, 3.1, 1.2, 0.8, -1.7), (-0.25, 0.5), 7.709605029213727),
    ((0.4, -1.3, 2.6, 3.3, 1.9), (0.45, 0.35), 1.1224541110278348),
]

# [DERIVED] mpmath quadrature of the Euler integral with endpoint substitution, 50 digits, frozen
QUAD_REFS = [
    ((2.2345, 3.363, 0.242, 8.3452, 0.657), (-2.311, -1.5), 0.17242887193913876),
    ((1.3, -0.6, 0.8, 2.1, 2.9), (-3.7, -5.2), 0.7431778573156578),
    ((-1.7, 2.4, 1.5, 0.9, 3.6), (0.7, -2.8), -0.2815445492764643),
]

UNIT = ParameterSet(1, 1, 1, 1, 1)
P = ParameterSet(1.37, -0.42, 2.15, 3.3, 1.85)

small = st.floats(-4.0, 4.0).filter(lambda v: abs(v - round(v)) > 1e-2)


def test_brute_force_origin():
    assert brute_force_f2(P, EvalPoint(0.0, 0.0), 20).value == 1


def test_brute_force_geometric():
    r = brute_force_f2(UNIT, EvalPoint(0.2, 0.3), 200)
    assert r.value == pytest.approx(2.0, rel=1e-13)
    assert r.method is OracleMethod.BRUTE_FORCE
    assert r.domain_ok


def test_brute_force_domain():
    with pytest.raises(DomainError):
        brute_force_f2(P, EvalPoint(0.6, -0.5), 50)


def test_brute_force_b2_equals_c2():
    # F2 with b2 = c2 reduces to (1-y)^(-a) 2F1(a, b1; c1; x/(1-y))
    p = ParameterSet(1.37, -0.42, 1.85, 3.3, 1.85)
    x, y = 0.2, 0.3
    ref = (1 - y) ** (-p.a) * gauss_2f1(p.a, p.b1, p.c1, x / (1 - y))
    assert rel_diff(brute_force_f2(p, EvalPoint(x, y), 200).value, ref) < 1e-12


@pytest.mark.parametrize("params, point, ref", SERIES_REFS)
def test_brute_force_frozen(params, point, ref):
    r = brute_force_f2(ParameterSet(*params), EvalPoint(*point), 200)
    assert rel_diff(r.value, ref) < 1e-12
    assert r.estimated_accuracy < 1e-12 * abs(r.value)


@pytest.mark.parametrize("params, point, ref", SERIES_REFS)
def test_single_sum_frozen(params, point, ref):
    r = single_sum_f2(ParameterSet(*params), EvalPoint(*point), 200)
    assert rel_diff(r.value, ref) < 1e-11


def test_single_sum_on_axis():
    r = single_sum_f2(P, EvalPoint(0.3, 0.0), 200)
    assert rel_diff(r.value, gauss_2f1(P.a, P.b1, P.c1, 0.3)) < 1e-13


@pytest.mark.parametrize("point", [(0.95, 0.5), (-2.311, 5.322), (0.2, 1.0005)])
def test_single_sum_domain(point):
    with pytest.raises(DomainError):
        single_sum_f2(P, EvalPoint(*point), 100)


def test_single_sum_outside_unit_ball():
    # |x| < |1-y| allows points where the double series itself diverges
    p, pt = ParameterSet(0.6, 1.2, 0.8, 2.4, 1.7), EvalPoint(0.5, -2.0)
    r = single_sum_f2(p, pt, 200)
    assert rel_diff(r.value, evaluate(p, pt, 12, 200).value) < 1e-9


def test_euler_quad_matches_brute_force():
    p, pt = ParameterSet(1, 1, 1, 3, 3), EvalPoint(0.2, 0.3)
    r = euler_quad_f2(p, pt)
    assert r.method is OracleMethod.EULER_QUAD
    assert rel_diff(r.value, brute_force_f2(p, pt, 200).value) < 1e-8


@pytest.mark.parametrize("params, point, ref", QUAD_REFS)
def test_euler_quad_frozen(params, point, ref):
    r = euler_quad_f2(ParameterSet(*params), EvalPoint(*point))
    assert rel_diff(r.value, ref) < 1e-10


@pytest.mark.parametrize("params, point, ref", QUAD_REFS)
def test_evaluate_matches_quadrature_refs(params, point, ref):
    assert rel_diff(evaluate(ParameterSet(*params), EvalPoint(*point), 12, 200).value, ref) < 1e-10


def test_euler_quad_domain():
    with pytest.raises(DomainError):
        euler_quad_f2(ParameterSet(1, 1, -0.5, 3, 3), EvalPoint(0.2, 0.3))
    with pytest.raises(DomainError):
        euler_quad_f2(ParameterSet(1, 1, 3.5, 3, 3), EvalPoint(0.2, 0.3))
    with pytest.raises(DomainError):
        euler_quad_f2(P, EvalPoint(0.7, 0.5))


def test_euler_quad_reference_point_2():
    # [PAPER] published reference point 2
    p = ParameterSet(-5.87056003391116, 4.33993527730256, 1.44218908732163,
                     3.12652020729955, 1.52984418542146)
    r = euler_quad_f2(p, EvalPoint(-6.55177221618387, -6.79935054310963))
    assert r.value.real == pytest.approx(1.171e7, rel=5e-3)
    assert abs(r.value.imag) < 1e-8 * abs(r.value.real)


def test_oracle_result_guard():
    with pytest.raises(ValueError):
        OracleResult(1.0, OracleMethod.BRUTE_FORCE, False, 0.0)
    assert OracleResult(None, OracleMethod.SINGLE_SUM, False, 0.0).value is None


@settings(max_examples=30)
@given(small, small, small, small, small, st.floats(-0.45, 0.45), st.floats(-0.45, 0.45))
def test_brute_force_agrees_with_single_sum(a, b1, b2, c1, c2, x, y):
    p, pt = ParameterSet(a, b1, b2, c1, c2), EvalPoint(x, y)
    bf = brute_force_f2(p, pt, 120)
    ss = single_sum_f2(p, pt, 200)
    tol = 1e-9 * abs(bf.value) + 10 * (bf.estimated_accuracy + ss.estimated_accuracy)
    assert abs(bf.value - ss.value) <= tol


def test_pde_constant_function():
    r1, r2 = pde_residual(ParameterSet(0, 1.3, -0.7, 2.2, 1.6), EvalPoint(0.2, 0.3))
    assert r1 < 1e-12 and r2 < 1e-12


def test_pde_interior_point():
    r1, r2 = pde_residual(P, EvalPoint(0.2, 0.3), h=1e-3)
    assert r1 < 1e-4 and r2 < 1e-4


def test_pde_outside_unit_ball():
    r1, r2 = pde_residual(P, EvalPoint(-2.5, 4.7), h=1e-3)
    assert r1 < 1e-4 and r2 < 1e-4


def test_pde_stencil_crossing():
    with pytest.raises(StencilDomainError):
        pde_residual(P, EvalPoint(0.5, 0.4995), h=1e-3)
