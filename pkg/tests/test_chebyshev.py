import math

import numpy as np
import pytest
from scipy import special

from bcsop import (
    Cheb56Kind,
    OddDegreeUnsupported,
    ParamVector,
    TrigPole,
    cheb56_poly,
    cheb56_roots,
    cheb56_roots_csv,
    cheb56_trig_eval,
    classical_eval,
    monic_poly,
    nevai_limit_check,
)


def test_kind_vectors():
    assert Cheb56Kind.FIFTH.vector == ParamVector(-1, 1, -3, 2)
    assert Cheb56Kind("sixth").vector == ParamVector(-1, 1, -5, 2)


def test_poly_examples():
    assert cheb56_poly("fifth", 2).coeffs == pytest.approx((1.0, -0.75), rel=1e-15)
    assert cheb56_poly("sixth", 2).coeffs == pytest.approx((1.0, -0.5), rel=1e-15)
    for kind in Cheb56Kind:
        assert cheb56_poly(kind, 1).coeffs == (1.0,)


def test_trig_examples():
    assert cheb56_trig_eval("fifth", 2, math.pi / 3) == pytest.approx(2 / 3, rel=1e-14)
    assert cheb56_trig_eval("sixth", 2, math.pi / 4) == pytest.approx(0.0, abs=1e-15)
    for t in (0.1, 0.8, 2.0):
        assert cheb56_trig_eval("fifth", 0, t) == pytest.approx(1.0, rel=1e-15)


@pytest.mark.parametrize("kind", list(Cheb56Kind))
@pytest.mark.parametrize("n", range(0, 11, 2))
def test_trig_matches_algebraic(kind, n):
    P = cheb56_poly(kind, n, monic=False)
    for t in np.linspace(0.05, 3.05, 25):
        if abs(math.cos(t)) < 1e-2:
            continue
        assert cheb56_trig_eval(kind, n, t) == pytest.approx(P(math.cos(t)), rel=1e-11, abs=1e-11)


def test_trig_poles_and_parity():
    with pytest.raises(TrigPole):
        cheb56_trig_eval("fifth", 2, math.pi / 2)
    with pytest.raises(TrigPole):
        cheb56_trig_eval("sixth", 2, 0.0)
    with pytest.raises(TrigPole):
        cheb56_trig_eval("sixth", 2, math.pi)
    with pytest.raises(ValueError):
        cheb56_trig_eval("fifth", 3, 0.4)


def test_roots_examples():
    np.testing.assert_allclose(cheb56_roots("fifth", 2), [-math.sqrt(3) / 2, math.sqrt(3) / 2], rtol=1e-15)
    np.testing.assert_allclose(cheb56_roots("sixth", 2), [-1 / math.sqrt(2), 1 / math.sqrt(2)], rtol=1e-15)


@pytest.mark.parametrize("kind", list(Cheb56Kind))
@pytest.mark.parametrize("degree", [2, 4, 6, 8, 10])
def test_roots_are_zeros(kind, degree):
    r = cheb56_roots(kind, degree)
    P = cheb56_poly(kind, degree)
    assert len(r) == degree
    assert np.all(np.diff(r) > 0)
    np.testing.assert_allclose(r, -r[::-1], atol=1e-15)
    assert max(abs(P(x)) for x in r) <= 1e-12


def test_roots_odd_degree_and_csv():
    with pytest.raises(OddDegreeUnsupported):
        cheb56_roots("fifth", 3)
    text = cheb56_roots_csv("fifth", 4)
    lines = text.strip().splitlines()
    assert lines[0] == "k,node"
    ks = [int(line.split(",")[0]) for line in lines[1:]]
    assert sorted(ks) == [1, 2, 4, 5]
    nodes = [float(line.split(",")[1]) for line in lines[1:]]
    np.testing.assert_array_equal(nodes, cheb56_roots("fifth", 4))


def test_classical_examples():
    assert classical_eval("T", 3, 0.5) == pytest.approx(-1.0, rel=1e-14)
    for x in (-0.7, 0.2, 0.9):
        assert classical_eval("legendre", 2, x) == pytest.approx((3 * x * x - 1) / 2, rel=1e-14)
    assert classical_eval("hermite", 2, 0.0) == pytest.approx(-2.0, rel=1e-15)


@pytest.mark.parametrize("n", range(11))
def test_classical_against_scipy(n):
    x = np.linspace(-1, 1, 20)
    np.testing.assert_allclose(classical_eval("T", n, x), np.cos(n * np.arccos(x)), rtol=1e-10, atol=1e-12)
    np.testing.assert_allclose(classical_eval("U", n, x), special.eval_chebyu(n, x), rtol=1e-10, atol=1e-12)
    np.testing.assert_allclose(classical_eval("legendre", n, x), special.eval_legendre(n, x), rtol=1e-10, atol=1e-12)
    np.testing.assert_allclose(classical_eval("hermite", n, x), special.eval_hermite(n, x), rtol=1e-10, atol=1e-9)
    for a in (0.5, 1.5, 3.0):
        np.testing.assert_allclose(
            classical_eval("gegenbauer", n, x, a=a), special.eval_gegenbauer(n, a, x), rtol=1e-10, atol=1e-12
        )


def test_gegenbauer_zero_parameter():
    assert classical_eval("gegenbauer", 0, 0.3, a=0) == 1.0
    assert classical_eval("gegenbauer", 2, 0.3, a=0) == 0.0
    with pytest.raises(ValueError):
        classical_eval("gegenbauer", 2, 0.3)


def test_nevai_limit_converges_at_rate_one_over_n():
    # even-index fifth-kind coefficients are -(n - 1)/(4(n + 1)) = -1/4 + 1/(2(n + 1))
    for kind in Cheb56Kind:
        c_n, c_prev = nevai_limit_check(kind.vector, 2000)
        assert abs(c_n + 0.25) < 1e-3 and abs(c_prev + 0.25) < 1e-3
    c200, _ = nevai_limit_check(Cheb56Kind.FIFTH.vector, 200)
    assert c200 == pytest.approx(-199 / 804, rel=1e-14)


def test_nevai_divergent_family():
    c, _ = nevai_limit_check(ParamVector(0, 1, -2, 0), 200)
    assert c == pytest.approx(-100.0, rel=1e-14)


def test_odd_members_factor_through_classical():
    # S̄_{2n+1}(-1,1,-1,0) = x S̄_{2n}(fifth) and S̄_{2n+1}(-1,1,-3,0) = x S̄_{2n}(sixth)
    T, U = ParamVector(-1, 1, -1, 0), ParamVector(-1, 1, -3, 0)
    for n in range(6):
        np.testing.assert_allclose(monic_poly(T, 2 * n + 1).coeffs, cheb56_poly("fifth", 2 * n).coeffs, rtol=1e-13)
        np.testing.assert_allclose(monic_poly(U, 2 * n + 1).coeffs, cheb56_poly("sixth", 2 * n).coeffs, rtol=1e-13)
