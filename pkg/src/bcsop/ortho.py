"""Favard norms, numerical orthogonality reports and finite-class bounds."""

from __future__ import annotations

import csv
import io
import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from ._integrate import integrable, weighted_integral
from .errors import (
    ConstraintViolated,
    DivergentMass,
    NonPositiveNorm,
    ZeroRecurrenceDenominator,
)
from .params import SubclassTag, validate_params
from .poly import monic_poly, recurrence_coefficient
from .weights import closed_form_mass, weight_closed_form, weight_eval

__all__ = [
    "OrthoReport",
    "total_mass",
    "favard_norm_sq",
    "gram_report",
    "finite_bound",
    "positivity_scan",
]


def total_mass(spec):
    """Integral of the weight over its support.

    Closed forms use their Beta/Gamma expressions; ``Generic`` weights are
    integrated numerically and reported as divergent if that fails.
    """
    if spec.form != "Generic":
        return closed_form_mass(spec)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        try:
            out = integrate.quad(lambda x: weight_eval(spec, x), -np.inf, np.inf, full_output=1)
        except (OverflowError, ZeroDivisionError):
            raise DivergentMass(f"{spec.formula()} is not integrable") from None
    val, err = out[0], out[1]
    # a fourth element is only returned when QUADPACK flags a problem
    if len(out) > 3 or not math.isfinite(val) or not err <= 1e-6 * abs(val):
        raise DivergentMass(f"{spec.formula()} is not integrable")
    return val


def favard_norm_sq(v, n, mass, strict=True):
    """``(-1)^n prod_{i<=n} C_i * mass``.

    With ``strict`` (default) a :class:`NonPositiveNorm` is raised as soon as
    some ``-C_i <= 0``, i.e. exactly when ``n`` exceeds :func:`positivity_scan`.
    """
    validate_params(v)
    value = mass
    for i in range(1, n + 1):
        beta = -recurrence_coefficient(v, i)
        if strict and not beta > 0:
            raise NonPositiveNorm(n, i, beta)
        value *= beta
    return value


def positivity_scan(v, n_max):
    """Largest ``N <= n_max`` with ``-C_n > 0`` for all ``1 <= n <= N``.

    An undefined ``C_n`` (vanishing denominator) ends the scan.
    """
    for n in range(1, n_max + 1):
        try:
            c = recurrence_coefficient(v, n)
        except ZeroRecurrenceDenominator:
            return n - 1
        if not -c > 0:
            return n - 1
    return n_max


def _largest_below(bound):
    """Largest integer strictly below ``bound``."""
    return math.ceil(bound) - 1


def finite_bound(tag):
    """Maximal degree of the orthogonal set, or ``math.inf`` for infinite families.

    The finite families use the strict form of the degree condition: at
    ``N == a + b - 1/2`` (resp. ``a - 1/2``) the squared norm integral of
    degree ``N`` diverges and ``C_N`` has a vanishing denominator.
    """
    if isinstance(tag, str):
        tag = SubclassTag(tag)
    t, a, b = tag.tag, tag.a, tag.b
    if t == "finite_algebraic":
        if not a < 0.5:
            raise ConstraintViolated("a < 1/2", a=a)
        if not b > 0:
            raise ConstraintViolated("b > 0", b=b)
        if not a + b > 0.5:
            raise ConstraintViolated("a + b > 1/2", a=a, b=b)
        return _largest_below(a + b - 0.5)
    if t == "finite_exponential":
        if not a > 0.5:
            raise ConstraintViolated("a > 1/2", a=a)
        return _largest_below(a - 0.5)
    if t in ("gup", "ghp", "gegenbauer"):
        bad = tag.constraint_warnings()
        if bad:
            raise ConstraintViolated(bad[0], a=a, b=b)
    return math.inf


@dataclass
class OrthoReport:
    """Numerical Gram matrix against the Favard prediction.

    ``gram[n, m]`` is ``<S̄_n, S̄_m>_W`` in the user's variable; divergent
    entries are ``inf`` and listed in ``divergent``.
    """

    max_index: int
    gram: np.ndarray
    predicted_norms: list
    mass: float
    max_offdiag_rel: float
    max_norm_rel_err: float
    error_estimates: np.ndarray
    divergent: list = field(default_factory=list)
    non_positive: list = field(default_factory=list)

    @property
    def numeric_norms(self):
        return [float(self.gram[n, n]) for n in range(self.max_index + 1)]

    def norm_rel_errors(self):
        out = []
        for n in range(self.max_index + 1):
            pred, num = self.predicted_norms[n], self.gram[n, n]
            out.append(abs(num - pred) / abs(pred) if pred and math.isfinite(num) else math.inf)
        return out

    def passed(self, tol=1e-8):
        return self.max_offdiag_rel <= tol and self.max_norm_rel_err <= tol

    def to_json(self):
        def f(x):
            return None if not math.isfinite(x) else float(x)

        return {
            "max_index": self.max_index,
            "mass": self.mass,
            "gram": [[f(x) for x in row] for row in self.gram],
            "predicted_norms": [float(x) for x in self.predicted_norms],
            "max_offdiag_rel": f(self.max_offdiag_rel),
            "max_norm_rel_err": f(self.max_norm_rel_err),
            "divergent": [list(p) for p in self.divergent],
            "non_positive": list(self.non_positive),
        }

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "predicted_norm", "numeric_norm", "rel_err"])
        for n, err in enumerate(self.norm_rel_errors()):
            writer.writerow(
                [n, f"{self.predicted_norms[n]:.17g}", f"{self.gram[n, n]:.17g}", f"{err:.17g}"]
            )
        return buf.getvalue()


def gram_report(v, N, transform=None, epsrel=1e-13):
    """Integrate all pairs ``0 <= m, n <= N`` and compare with the Favard norms.

    Off-diagonal entries are measured relative to ``sqrt(|norm_n norm_m|)``
    of the predicted norms; diagonal entries by relative error.

    Parameters
    ----------
    v : ParamVector
    N : int
        Largest degree.
    transform : Transform, optional
        Integrate in the user's variable ``x`` with ``t = w x + v``; every
        entry then carries the Jacobian ``1/|w|``.
    """
    spec = weight_closed_form(v, transform)
    mass = total_mass(spec)
    jac = 1.0 / abs(transform.w) if transform is not None else 1.0
    polys = [monic_poly(v, n) for n in range(N + 1)]

    predicted = [favard_norm_sq(v, n, mass, strict=False) for n in range(N + 1)]
    non_positive = list(range(positivity_scan(v, N) + 1, N + 1))

    gram = np.zeros((N + 1, N + 1))
    errs = np.zeros((N + 1, N + 1))
    divergent = []
    for n in range(N + 1):
        for m in range(n, N + 1):
            if not integrable(spec, n + m):
                gram[n, m] = gram[m, n] = math.inf
                errs[n, m] = errs[m, n] = math.inf
                divergent.append((n, m))
                continue
            val, err = weighted_integral(spec, [polys[n], polys[m]], epsrel=epsrel, label=(n, m))
            gram[n, m] = gram[m, n] = val * jac
            errs[n, m] = errs[m, n] = err * jac

    max_off = 0.0
    max_diag = 0.0
    for n in range(N + 1):
        pn = abs(predicted[n])
        num = gram[n, n]
        if not math.isfinite(num) or n in non_positive:
            max_diag = math.inf
        else:
            max_diag = max(max_diag, abs(num - predicted[n]) / pn)
        for m in range(n + 1, N + 1):
            ref = math.sqrt(pn * abs(predicted[m]))
            entry = gram[n, m]
            rel = abs(entry) / ref if ref > 0 and math.isfinite(entry) else math.inf
            max_off = max(max_off, rel)
    return OrthoReport(
        max_index=N,
        gram=gram,
        predicted_norms=predicted,
        mass=mass,
        max_offdiag_rel=max_off,
        max_norm_rel_err=max_diag,
        error_estimates=errs,
        divergent=divergent,
        non_positive=non_positive,
    )

