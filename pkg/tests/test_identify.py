import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.polynomial import Polynomial

from bcsop import (
    AmbiguousSolution,
    DegenerateParameters,
    LogDerivSpec,
    NoSolution,
    ParamVector,
    PatternMismatch,
    Transform,
    VerificationFailed,
    params_equivalent,
    params_from_logderiv,
    params_from_recurrence,
    parse_cn_template,
    recurrence_coefficient,
    weight_closed_form,
)
from bcsop.identify import recurrence_equations


def ex2_cn(n):
    return -2 * (6 + (-1) ** n * (n - 6)) / ((2 * n - 11) * (2 * n - 13))


def test_logderiv_example_i():
    v = params_from_logderiv(LogDerivSpec([-16, 0, 6], [0, -4, 0, 1]))
    assert v.as_tuple() == (1, -4, 8, -16)
    # unreduced W'/W of the polynomial weight -x^6 + 4x^4
    raw = params_from_logderiv(LogDerivSpec.from_polynomial_weight([0, 0, 0, 0, 4, 0, -1]))
    assert params_equivalent(raw, ParamVector(1, -4, 8, -16), rtol=1e-12)


def test_logderiv_example_ii():
    assert params_from_logderiv(LogDerivSpec([2, 0, -2], [0, 1])).as_tuple() == (0, 1, -2, 2)
    # W_2(x) = (16x^2 - 8x + 1) exp(2x(1 - 2x)) in the original variable, t = 2x - 1/2
    num, den = [6, 16, -32], [-1, 4]
    v = params_from_logderiv(LogDerivSpec(num, den, Transform(2, -0.5)))
    assert params_equivalent(v, ParamVector(0, 1, -2, 2), rtol=1e-12)


def test_logderiv_example_iii():
    assert params_from_logderiv(LogDerivSpec([2, 0, -8], [0, 1, 0, 1])).as_tuple() == (1, 1, -6, 2)
    # W_3(x) = (2x + 1)^2 (2x^2 + 2x + 1)^-5, unreduced W'/W in x, t = 2x + 1
    A, B = Polynomial([1, 2]) ** 2, Polynomial([1, 2, 2])
    num, den = A.deriv() * B - 5 * A * B.deriv(), A * B
    v = params_from_logderiv(LogDerivSpec(num.coef, den.coef, Transform(2, 1)))
    assert params_equivalent(v, ParamVector(1, 1, -6, 2), rtol=1e-12)


def test_logderiv_gaussian_with_even_denominator():
    # x^2 e^{-x^2}: W'/W = (2 - 2x^2)/x, also given as (2x - 2x^3)/x^2
    v = params_from_logderiv(LogDerivSpec([0, 2, 0, -2], [0, 0, 1]))
    assert params_equivalent(v, ParamVector(0, 1, -2, 2))


def test_logderiv_mismatch_and_degenerate():
    with pytest.raises(PatternMismatch):
        params_from_logderiv(LogDerivSpec([1, 1], [1, 0, 1]))
    with pytest.raises(PatternMismatch):
        params_from_logderiv(LogDerivSpec([1, 1, 1], [0, 1, 0, 1]))
    with pytest.raises(PatternMismatch):
        params_from_logderiv(LogDerivSpec([1, 0, 0, 0, 1], [0, 1, 0, 1]))
    # numerator 0 over p x^3: p = r = 0 after matching (r - 2p = 0 forces r = 2p) -> use q x
    with pytest.raises(DegenerateParameters):
        params_from_logderiv(LogDerivSpec([0.0], [0, 1]))


def test_logderiv_json_round_trip():
    spec = LogDerivSpec([2, 0, -8], [0, 1, 0, 1], Transform(2, 1))
    data = json.loads(json.dumps(spec.to_json()))
    assert LogDerivSpec.from_json(data) == spec
    assert LogDerivSpec.from_json({"num": [1], "den": [0, 1], "transform": {"w": 2, "v": 1}}).transform == Transform(2, 1)


@pytest.mark.parametrize(
    "v",
    [ParamVector(-1, 1, -6, 2), ParamVector(1, -4, 8, -16), ParamVector(0, 1, -2, 3), ParamVector(1, 0, -10, 2),
     ParamVector(2, 3, -17, -1)],
)
def test_logderiv_round_trip_from_weight(v):
    from bcsop import log_derivative

    spec = weight_closed_form(v)
    num, den = log_derivative(spec)
    got = params_from_logderiv(LogDerivSpec(num, den))
    assert params_equivalent(got, v, rtol=1e-10)


def test_recurrence_example2():
    cs = [ex2_cn(n) for n in range(1, 5)]
    assert cs == pytest.approx([-2 / 9, -4 / 63, -18 / 35, -8 / 15], rel=1e-14)
    v = params_from_recurrence(ex2_cn)
    assert params_equivalent(v, ParamVector(1, 0, -10, 2), rtol=1e-10)
    assert weight_closed_form(v).formula() == "x^{-12} e^{-1/x^2}"


def test_recurrence_system_example2():
    cvals = {n: ex2_cn(n) for n in range(1, 5)}
    A = recurrence_equations(cvals, range(2, 6))
    np.testing.assert_allclose(A @ np.array([1, 0, -10, 2]), 0, atol=1e-13)


def test_recurrence_constant_quarter():
    v = params_from_recurrence([-0.25] * 8)
    assert params_equivalent(v, ParamVector(-1, 1, -3, 0), rtol=1e-10)


def test_recurrence_ghp_pattern():
    v = params_from_recurrence(lambda n: -n / 2 - (1 - (-1) ** n) / 2)
    assert params_equivalent(v, ParamVector(0, 1, -2, 2), rtol=1e-10)


def test_recurrence_removable_singularity():
    # Chebyshev T: C_1 = -1/2 comes from the 0/0 limit
    v = params_from_recurrence(lambda n: -0.5 if n == 1 else -0.25)
    assert params_equivalent(v, ParamVector(-1, 1, -1, 0), rtol=1e-10)


def test_recurrence_template_input():
    f = parse_cn_template("-2*(6+(-1)**n*(n-6))/((2*n-11)*(2*n-13))")
    assert [f(n) for n in range(1, 8)] == pytest.approx([ex2_cn(n) for n in range(1, 8)], rel=1e-15)
    with pytest.raises(ValueError):
        parse_cn_template("__import__('os')")


def test_recurrence_failures():
    with pytest.raises(NoSolution):
        params_from_recurrence([-0.3, -0.2, -0.1, -0.7, -0.2, -0.4])
    # satisfies degrees 2..5 for (1, 0, -10, 2) but breaks at n = 6
    with pytest.raises(VerificationFailed) as info:
        params_from_recurrence([ex2_cn(n) for n in range(1, 6)] + [99.0, ex2_cn(7), ex2_cn(8)])
    assert info.value.n == 6
    with pytest.raises(ValueError):
        params_from_recurrence([-0.25] * 3)


def test_recurrence_ambiguous():
    # all-zero data make every row vanish
    with pytest.raises(AmbiguousSolution) as info:
        params_from_recurrence([0.0] * 4)
    assert len(info.value.family) >= 2


@given(
    st.floats(-3, 3).filter(lambda x: abs(x) > 0.1),
    st.floats(-3, 3).filter(lambda x: abs(x) > 0.1),
    st.floats(-3, 3),
    st.floats(-3, 3),
)
def test_recurrence_round_trip(p, q, r, s):
    v = ParamVector(p, q, r, s)
    try:
        cs = [recurrence_coefficient(v, n) for n in range(1, 9)]
    except ArithmeticError:
        return
    if not all(math.isfinite(c) and abs(c) < 1e6 for c in cs):
        return
    try:
        got = params_from_recurrence(cs)
    except (NoSolution, AmbiguousSolution, VerificationFailed):
        # ill-conditioned draws near a pole of some C_n are allowed to be rejected
        return
    for n in range(1, 9):
        assert recurrence_coefficient(got, n) == pytest.approx(cs[n - 1], rel=1e-7, abs=1e-9)
