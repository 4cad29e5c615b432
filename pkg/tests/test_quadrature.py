import math

import numpy as np
import pytest
from scipy import special

from bcsop import (
    EigenFailure,
    ParamVector,
    PositivityViolated,
    QuadratureRule,
    closed_form_mass,
    gauss_rule,
    integrate,
    jacobi_matrix,
    monic_poly,
    moment,
    recurrence_nodes,
    weight_closed_form,
)

FIFTH = ParamVector(-1, 1, -3, 2)
U = ParamVector(-1, 1, -3, 0)


def test_jacobi_examples():
    J = jacobi_matrix(FIFTH, 2)
    np.testing.assert_allclose(J, [[0, math.sqrt(0.75)], [math.sqrt(0.75), 0]], rtol=1e-15)
    J = jacobi_matrix(U, 4)
    np.testing.assert_allclose(np.diag(J, 1), [0.5] * 3, rtol=1e-15)
    np.testing.assert_array_equal(np.diag(J), 0)
    np.testing.assert_array_equal(jacobi_matrix(U, 1), [[0.0]])


def test_jacobi_positivity():
    with pytest.raises(PositivityViolated) as info:
        jacobi_matrix(ParamVector(1, 0, -10, 2), 7)
    assert info.value.k == 6
    with pytest.raises(PositivityViolated):
        gauss_rule(ParamVector(1, 0, -10, 2), 8)


def test_gauss_examples():
    rule = gauss_rule(FIFTH, 2, mass=math.pi / 2)
    np.testing.assert_allclose(rule.nodes, [-math.sqrt(3) / 2, math.sqrt(3) / 2], rtol=1e-15)
    np.testing.assert_allclose(rule.weights, [math.pi / 4] * 2, rtol=1e-14)
    rule = gauss_rule(U, 3, mass=math.pi / 2)
    np.testing.assert_allclose(rule.nodes, [-math.sqrt(0.5), 0.0, math.sqrt(0.5)], rtol=1e-15)
    assert rule.nodes[1] == 0.0
    rule = gauss_rule(ParamVector(0, 1, -2, 2), 1)
    assert rule.nodes.tolist() == [0.0] and rule.weights[0] == rule.mass


def test_integrate_examples():
    rule = gauss_rule(FIFTH, 3)
    assert integrate(rule, lambda x: 1.0) == pytest.approx(math.pi / 2, rel=1e-14)
    assert abs(integrate(rule, lambda x: x**3 + x)) <= 1e-15
    assert integrate(rule, lambda x: x**4) == pytest.approx(special.beta(3.5, 0.5), rel=1e-12)


@pytest.mark.parametrize(
    "v",
    [
        ParamVector(-1, 1, -6, 2),
        ParamVector(0, 1, -2, 2),
        ParamVector(1, 1, -22, 2),  # algebraic, a = -1, b = 10
        ParamVector(1, 0, -18, 2),  # exponential, a = 10
    ],
)
@pytest.mark.parametrize("n", range(1, 9))
def test_gauss_exactness(v, n):
    spec = weight_closed_form(v)
    rule = gauss_rule(v, n)
    for j in range(0, 2 * n, 2):
        assert integrate(rule, lambda x: x**j) == pytest.approx(moment(spec, j), rel=1e-10)


def test_nodes_are_zeros():
    for v in (FIFTH, ParamVector(0, 1, -2, 1), ParamVector(1, 1, -22, 2)):
        for n in (3, 6, 7):
            P = monic_poly(v, n)
            nodes = recurrence_nodes(v, n)
            scale = max(abs(c) for c in P.coeffs)
            assert max(abs(P(x)) for x in nodes) <= 1e-12 * scale
            np.testing.assert_array_equal(nodes, -nodes[::-1])


def test_weights_positive_and_sum_to_mass():
    for n in range(1, 9):
        rule = gauss_rule(ParamVector(-1, 1, -7, 1), n)
        assert np.all(rule.weights > 0)
        assert math.fsum(rule.weights) == pytest.approx(rule.mass, rel=1e-13)


def test_rule_serialization():
    rule = gauss_rule(FIFTH, 5)
    again = QuadratureRule.from_json(rule.to_json())
    np.testing.assert_array_equal(again.nodes, rule.nodes)
    again = QuadratureRule.from_csv(rule.to_csv(), mass=rule.mass)
    np.testing.assert_array_equal(again.nodes, rule.nodes)
    np.testing.assert_array_equal(again.weights, rule.weights)
    assert len(rule) == 5


def test_rule_validation():
    with pytest.raises(ValueError):
        QuadratureRule([0.0, 1.0], [1.0], 1.0)
    with pytest.raises(ValueError):
        gauss_rule(FIFTH, 0)


def test_eigen_failure_wrapping(monkeypatch):
    from scipy.linalg import LinAlgError

    import bcsop.quadrature as q

    def broken(*args, **kwargs):
        raise LinAlgError("no convergence")

    monkeypatch.setattr(q, "eigh_tridiagonal", broken)
    with pytest.raises(EigenFailure):
        q.gauss_rule(FIFTH, 4)
