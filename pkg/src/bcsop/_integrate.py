"""Numerical integration of weight * polynomial products.

Each closed form is reduced to integrals on finite intervals whose endpoint
singularities are pure powers, which QUADPACK's QAWS handles exactly:

* AlgebraicBeta: ``[0, L]`` with ``x^{2a} (L - x)^b``.
* GaussianPower: ``[0, 40 w]`` with ``x^{2a}``; the tail is below 1e-300.
* AlgebraicCauchy: ``[0, L]`` directly, and ``[L, inf)`` through ``x = L/u``,
  which turns the algebraic decay into a power ``u^{2a + 2b - 2 - d}``.
* ExpInverse: all of ``(0, inf)`` through ``x = w/u``, which turns it into a
  Gaussian-type integral with power ``u^{2a - 2 - d}``; the integrand is 0 at
  ``x = 0``.

The negative half-line contributes ``(-1)^d`` times the positive one since
the weight is even and the product has parity ``d``.
"""

from __future__ import annotations

import math
import warnings

from scipy import integrate

from .errors import DivergentMass, IntegrationFailure

GAUSSIAN_CUTOFF = 40.0


def integrable(spec, degree):
    """Whether ``W * x^degree`` is integrable near 0 and at the ends of the support."""
    a, b = spec.a, spec.b
    d = degree
    if spec.form == "AlgebraicBeta":
        return 2 * a + d > -1 and b > -1
    if spec.form == "GaussianPower":
        return 2 * a + d > -1
    if spec.form == "AlgebraicCauchy":
        return -2 * a > -1 and 2 * a + 2 * b - 2 - d > -1
    if spec.form == "ExpInverse":
        return 2 * a - 2 - d > -1
    return False


def _quad(f, lo, hi, wvar, epsrel, limit, label):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, abserr, info = integrate.quad(
            f, lo, hi, weight="alg", wvar=wvar, epsabs=0.0, epsrel=epsrel,
            limit=limit, full_output=1,
        )[:3]
    if not math.isfinite(value):
        raise IntegrationFailure(label, abserr)
    return value, abserr, info


def weighted_integral(spec, polys, epsrel=1e-13, limit=400, label=None):
    """``int W(t) prod_i P_i(t) dt`` over the symmetric support.

    Returns ``(value, abserr)``. The weight's transform is ignored; callers
    apply the Jacobian.

    Raises
    ------
    DivergentMass
        if the integral does not converge (decided from the exponents).
    IntegrationFailure
        if QUADPACK reports a non-finite result.
    """
    d = sum(P.n for P in polys)
    label = label if label is not None else tuple(P.n for P in polys)
    if not integrable(spec, d):
        raise DivergentMass(f"weight {spec.formula()} times degree {d} is not integrable")
    a, b, sc = spec.a, spec.b, spec.scale
    parity = 1.0 + (-1.0) ** d

    def prod_at(x):
        out = 1.0
        for P in polys:
            out *= P(x)
        return out

    def prod_rev(z):
        out = 1.0
        for P in polys:
            out *= P.reversed_call(z)
        return out

    form = spec.form
    if form == "AlgebraicBeta":
        val, err, _ = _quad(
            lambda x: (sc + x) ** b * prod_at(x), 0.0, sc, (2 * a, b), epsrel, limit, label
        )
    elif form == "GaussianPower":
        val, err, _ = _quad(
            lambda x: math.exp(-(x / sc) ** 2) * prod_at(x),
            0.0, GAUSSIAN_CUTOFF * sc, (2 * a, 0.0), epsrel, limit, label,
        )
    elif form == "AlgebraicCauchy":
        # x = L y on [0, 1] and x = L / u on [1, inf)
        factor = sc ** (1 - 2 * a - 2 * b)
        v1, e1, _ = _quad(
            lambda y: (1 + y * y) ** (-b) * prod_at(sc * y), 0.0, 1.0, (-2 * a, 0.0),
            epsrel, limit, label,
        )
        v2, e2, _ = _quad(
            lambda u: (1 + u * u) ** (-b) * prod_rev(u / sc), 0.0, 1.0,
            (2 * a + 2 * b - 2 - d, 0.0), epsrel, limit, label,
        )
        val = factor * (v1 + sc**d * v2)
        err = factor * (e1 + sc**d * e2)
    elif form == "ExpInverse":
        # x = w / u on (0, inf)
        factor = sc ** (1 - 2 * a + d)
        v, e, _ = _quad(
            lambda u: math.exp(-u * u) * prod_rev(u / sc), 0.0, GAUSSIAN_CUTOFF,
            (2 * a - 2 - d, 0.0), epsrel, limit, label,
        )
        val, err = factor * v, factor * e
    else:
        raise DivergentMass(f"generic weight {spec.formula()} has no finite integrals")
    return parity * val, parity * err
