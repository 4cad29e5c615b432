"""Weight functions of the dual symmetric family and their closed forms.

Every valid vector with ``(p, q) != (0, 0)`` reduces, after the scaling
``x = scale * t``, to one of four templates::

    AlgebraicBeta(a, b)    |t|^{2a} (1 - t^2)^b      on [-1, 1]
    GaussianPower(a)       |t|^{2a} exp(-t^2)        on R
    AlgebraicCauchy(a, b)  |t|^{-2a} (1 + t^2)^{-b}  on R
    ExpInverse(a)          |t|^{-2a} exp(-1/t^2)     on R

or to a ``Generic`` weight that grows without bound. Weights are evaluated
in the scale-free normalization ``exp(int ((r - 2p) x^2 + s) / (x (p x^2 + q)) dx)``
with no integration constant, e.g. ``x^4 (4 - x^2)`` for ``(1, -4, 8, -16)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import (
    ConstraintViolated,
    DegenerateParameters,
    DivergentMass,
    NonPositiveNorm,
    OutsideSupport,
)
from .params import ParamVector, validate_params
from .poly import monic_poly, recurrence_coefficient

__all__ = [
    "FORMS",
    "Transform",
    "WeightSpec",
    "weight_closed_form",
    "weight_eval",
    "log_derivative",
    "pearson_residual",
    "pdf_constant",
    "closed_form_mass",
    "moment",
    "dual_pdf_eval",
]

FORMS = ("AlgebraicBeta", "GaussianPower", "AlgebraicCauchy", "ExpInverse", "Generic")


@dataclass(frozen=True)
class Transform:
    """Affine change of variable ``t = w * x + v`` from the user's ``x`` to symmetric ``t``."""

    w: float
    v: float = 0.0

    def __post_init__(self):
        if self.w == 0:
            raise ValueError("transform scale must be nonzero")

    def __call__(self, x):
        return self.w * x + self.v

    def inverse(self, t):
        return (t - self.v) / self.w


@dataclass(frozen=True)
class WeightSpec:
    params: ParamVector
    form: str
    a: Optional[float] = None
    b: Optional[float] = None
    scale: float = 1.0
    transform: Optional[Transform] = None

    @property
    def support(self):
        """Support in the symmetric variable as ``(lo, hi)``."""
        if self.form == "AlgebraicBeta":
            return (-self.scale, self.scale)
        return (-math.inf, math.inf)

    @property
    def bounded(self):
        return self.form == "AlgebraicBeta"

    def with_transform(self, transform):
        return WeightSpec(self.params, self.form, self.a, self.b, self.scale, transform)

    def support_label(self):
        if not self.bounded:
            return "R"
        return f"[-{_fmt(self.scale)},{_fmt(self.scale)}]"

    def formula(self):
        """Human-readable closed form, e.g. ``x^{-12} e^{-1/x^2}``.

        With a transform the form is written in ``t`` and the substitution
        is appended, e.g. ``t^{2} (1 + t^2)^{-5}, t = 2x + 1``.
        """
        text = self._symmetric_formula()
        if self.transform is None:
            return text
        w, v = self.transform.w, self.transform.v
        lead = {1.0: "", -1.0: "-"}.get(w, _fmt(w))
        lin = f"{lead}x" + ("" if v == 0 else f" {'+' if v > 0 else '-'} {_fmt(abs(v))}")
        return f"{text.replace('x', 't')}, t = {lin}"

    def _symmetric_formula(self):
        a, b, sc = self.a, self.b, self.scale
        if self.form == "AlgebraicBeta":
            return _join(_power(2 * a), _factor(f"{_fmt(sc * sc)} - x^2", b))
        if self.form == "GaussianPower":
            return _join(_power(2 * a), f"e^{{-{_coef(1 / sc**2)}x^2}}")
        if self.form == "AlgebraicCauchy":
            return _join(_power(-2 * a), _factor(f"{_fmt(sc * sc)} + x^2", -b))
        if self.form == "ExpInverse":
            return _join(_power(-2 * a), f"e^{{-{_fmt(sc * sc)}/x^2}}")
        p, q, r, s = self.params.as_tuple()
        if p == 0:
            return _join(_power(s / q), f"e^{{{_fmt(r / (2 * q))} x^2}}")
        return _join(_power((r - 2 * p) / p), f"e^{{{_fmt(-s / (2 * p))}/x^2}}")

    def to_json(self):
        out = {
            "params": self.params.to_json(),
            "support": self.support_label(),
            "form": self.form,
        }
        if self.a is not None:
            out["a"] = self.a
        if self.b is not None:
            out["b"] = self.b
        if self.scale != 1.0:
            out["scale"] = self.scale
        if self.transform is not None:
            out["transform"] = {"w": self.transform.w, "v": self.transform.v}
        return out

    @classmethod
    def from_json(cls, data):
        tr = data.get("transform")
        return cls(
            ParamVector.from_json(data["params"]),
            data["form"],
            data.get("a"),
            data.get("b"),
            data.get("scale", 1.0),
            Transform(tr["w"], tr.get("v", 0.0)) if tr else None,
        )


def _fmt(x):
    frac = Fraction(x).limit_denominator(1000)
    if abs(float(frac) - x) <= 1e-12 * max(1.0, abs(x)):
        return str(frac.numerator) if frac.denominator == 1 else f"{frac.numerator}/{frac.denominator}"
    return repr(float(x))


def _coef(c):
    return "" if abs(c - 1) < 1e-15 else f"{_fmt(c)} "


def _power(e):
    if e == 0:
        return ""
    frac = Fraction(e).limit_denominator(1000)
    base = "x" if frac.denominator == 1 and frac.numerator % 2 == 0 else "|x|"
    return base if e == 1 else f"{base}^{{{_fmt(e)}}}"


def _factor(inner, e):
    if e == 0:
        return ""
    return f"({inner})" if e == 1 else f"({inner})^{{{_fmt(e)}}}"


def _join(*parts):
    return " ".join(p for p in parts if p) or "1"


def weight_closed_form(v, transform=None):
    """Match ``v`` to a closed-form weight, up to scale-equivalence and ``x -> scale*x``."""
    validate_params(v)
    p, q, r, s = v.as_tuple()
    if p == 0 and q == 0:
        raise DegenerateParameters("p,q", v)
    if p != 0 and q != 0:
        if q / p < 0:
            form = "AlgebraicBeta"
            scale = math.sqrt(-q / p)
            a = s / (2 * q)
            b = r / (2 * p) - s / (2 * q) - 1
        else:
            form = "AlgebraicCauchy"
            scale = math.sqrt(q / p)
            a = -s / (2 * q)
            b = 1 + s / (2 * q) - r / (2 * p)
        return WeightSpec(v, form, a, b, scale, transform)
    if p == 0:
        if r / q < 0:
            return WeightSpec(v, "GaussianPower", s / (2 * q), None, math.sqrt(-2 * q / r), transform)
        return WeightSpec(v, "Generic", transform=transform)
    if s / p > 0:
        return WeightSpec(v, "ExpInverse", 1 - r / (2 * p), None, math.sqrt(s / (2 * p)), transform)
    return WeightSpec(v, "Generic", transform=transform)


def _abs_pow(t, e):
    t = abs(t)
    if e == 0:
        return 1.0
    if t == 0:
        return 0.0 if e > 0 else math.inf
    return t ** e


def _symmetric_weight(spec, t):
    a, b, sc = spec.a, spec.b, spec.scale
    form = spec.form
    if form == "AlgebraicBeta":
        if abs(t) > sc:
            raise OutsideSupport(f"{t} outside [-{sc}, {sc}]")
        return _abs_pow(t, 2 * a) * _abs_pow(sc * sc - t * t, b)
    if form == "GaussianPower":
        return _abs_pow(t, 2 * a) * math.exp(-t * t / (sc * sc))
    if form == "AlgebraicCauchy":
        return _abs_pow(t, -2 * a) * (sc * sc + t * t) ** (-b)
    if form == "ExpInverse":
        if t == 0:
            return 0.0
        return _abs_pow(t, -2 * a) * math.exp(-sc * sc / (t * t))
    p, q, r, s = spec.params.as_tuple()
    if p == 0:
        return _abs_pow(t, s / q) * math.exp(r * t * t / (2 * q))
    if t == 0:
        return math.inf
    return _abs_pow(t, (r - 2 * p) / p) * math.exp(-s / (2 * p * t * t))


def weight_eval(spec, x):
    """Weight value at the user's ``x`` (mapped through ``spec.transform`` if set)."""
    if np.ndim(x):
        return np.vectorize(lambda xi: weight_eval(spec, xi), otypes=[float])(x)
    x = float(x)
    if math.isnan(x):
        raise OutsideSupport("x is NaN")
    t = spec.transform(x) if spec.transform is not None else x
    return _symmetric_weight(spec, t)


def _log_derivative_value(spec, t):
    a, b, sc = spec.a, spec.b, spec.scale
    form = spec.form
    if form == "AlgebraicBeta":
        return 2 * a / t - 2 * b * t / (sc * sc - t * t)
    if form == "GaussianPower":
        return 2 * a / t - 2 * t / (sc * sc)
    if form == "AlgebraicCauchy":
        return -2 * a / t - 2 * b * t / (sc * sc + t * t)
    if form == "ExpInverse":
        return -2 * a / t + 2 * sc * sc / t**3
    p, q, r, s = spec.params.as_tuple()
    if p == 0:
        return s / (q * t) + r * t / q
    return (r - 2 * p) / (p * t) + s / (p * t**3)


def log_derivative(spec):
    """``W'/W`` as ``(numerator, denominator)`` ascending coefficient lists.

    Built from the closed-form shape parameters (not from ``spec.params``),
    in the symmetric variable.
    """
    a, b, sc = spec.a, spec.b, spec.scale
    L2 = sc * sc
    form = spec.form
    if form == "AlgebraicBeta":
        # 2a/t + 2b t/(t^2 - L^2)
        return [-2 * a * L2, 0.0, 2 * a + 2 * b], [0.0, -L2, 0.0, 1.0]
    if form == "GaussianPower":
        return [2 * a, 0.0, -2 / L2], [0.0, 1.0]
    if form == "AlgebraicCauchy":
        return [-2 * a * L2, 0.0, -2 * a - 2 * b], [0.0, L2, 0.0, 1.0]
    if form == "ExpInverse":
        return [2 * L2, 0.0, -2 * a], [0.0, 0.0, 0.0, 1.0]
    p, q, r, s = spec.params.as_tuple()
    return [s, 0.0, r - 2 * p], [0.0, q, 0.0, p]


def pearson_residual(spec, x):
    """``x d/dx((p x^2 + q) W) - (r x^2 + s) W`` in the symmetric variable.

    ``W'`` is taken analytically from the closed form's own shape parameters,
    so a wrong template match shows up as a nonzero residual.
    """
    x = float(x)
    lo, hi = spec.support
    if not (lo < x < hi):
        raise OutsideSupport(f"{x} is not interior to the support")
    p, q, r, s = spec.params.as_tuple()
    w = _symmetric_weight(spec, x)
    if w == 0:
        return 0.0
    dw = w * _log_derivative_value(spec, x)
    return x * (2 * p * x * w + (p * x * x + q) * dw) - (r * x * x + s) * w


def _check_constraints(form, a, b):
    if form == "AlgebraicBeta":
        if not a + 0.5 > 0:
            raise ConstraintViolated("a + 1/2 > 0", a=a)
        if not b + 1 > 0:
            raise ConstraintViolated("b + 1 > 0", b=b)
    elif form == "GaussianPower":
        if not a + 0.5 > 0:
            raise ConstraintViolated("a + 1/2 > 0", a=a)
    elif form == "AlgebraicCauchy":
        if not b + a > 0.5:
            raise ConstraintViolated("b + a > 1/2", a=a, b=b)
        if not a < 0.5:
            raise ConstraintViolated("a < 1/2", a=a)
        if not b > 0:
            raise ConstraintViolated("b > 0", b=b)
    elif form == "ExpInverse":
        if not a > 0.5:
            raise ConstraintViolated("a > 1/2", a=a)
    else:
        raise ValueError(f"no closed-form constraints for {form!r}")


def _log_template_mass(form, a, b):
    lg = math.lgamma
    if form == "AlgebraicBeta":
        return lg(a + 0.5) + lg(b + 1) - lg(a + b + 1.5)
    if form == "GaussianPower":
        return lg(a + 0.5)
    if form == "AlgebraicCauchy":
        return lg(b + a - 0.5) + lg(0.5 - a) - lg(b)
    return lg(a - 0.5)


def pdf_constant(form, a, b=None):
    """Normalizing constant of a unit-scale template (reciprocal of its mass).

    Raises
    ------
    ConstraintViolated
        naming the failed inequality.
    """
    _check_constraints(form, a, b)
    return math.exp(-_log_template_mass(form, a, b))


def _scale_exponent(form, a, b):
    # mass(scale) = scale**e * mass(1)
    if form == "AlgebraicBeta":
        return 2 * a + 2 * b + 1
    if form == "GaussianPower":
        return 2 * a + 1
    if form == "AlgebraicCauchy":
        return 1 - 2 * a - 2 * b
    return 1 - 2 * a


def closed_form_mass(spec):
    """Integral of the weight over its support, in the user's variable.

    Raises
    ------
    DivergentMass
        when the closed form's integrability constraints fail, or for
        ``Generic`` weights.
    """
    if spec.form == "Generic":
        raise DivergentMass(f"no finite closed-form mass for {spec.formula()}")
    try:
        _check_constraints(spec.form, spec.a, spec.b)
    except ConstraintViolated as exc:
        raise DivergentMass(f"{spec.formula()} is not integrable: {exc}") from exc
    log_mass = _log_template_mass(spec.form, spec.a, spec.b)
    mass = math.exp(log_mass) * spec.scale ** _scale_exponent(spec.form, spec.a, spec.b)
    if spec.transform is not None:
        mass /= abs(spec.transform.w)
    return mass


def moment(spec, j):
    """``int t^j W(t) dt`` in the symmetric variable, via shifted shape parameters."""
    if j % 2:
        return 0.0
    i = j // 2
    if spec.form in ("AlgebraicBeta", "GaussianPower"):
        a = spec.a + i
    elif spec.form in ("AlgebraicCauchy", "ExpInverse"):
        a = spec.a - i
    else:
        raise DivergentMass("Generic weights have no finite moments")
    # in the scale-free normalization x^{2i} W(x) is exactly the shifted weight
    return closed_form_mass(WeightSpec(spec.params, spec.form, a, spec.b, spec.scale))


def dual_pdf_eval(v, m, x):
    """Generalized density ``W S̄_m^2 / ((-1)^m prod C_i * mass)`` at symmetric ``x``."""
    spec = weight_closed_form(v)
    mass = closed_form_mass(spec)
    norm = 1.0
    for i in range(1, m + 1):
        beta = -recurrence_coefficient(v, i)
        if not beta > 0:
            raise NonPositiveNorm(m, i, beta)
        norm *= beta
    poly = monic_poly(v, m)
    val = poly(x)
    return weight_eval(spec, x) * val * val / (norm * mass)
