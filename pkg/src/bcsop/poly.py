"""Construction and evaluation of the symmetric polynomials S_n(p, q, r, s; x).

Coefficients are stored in the sparse symmetric layout ``c_k`` for
``x**(n - 2k)``, ``k = 0 .. n//2``, so parity holds by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BoundaryUndefined,
    GammaPole,
    HypergeometricDomain,
    ZeroDenominator,
    ZeroLeadingFactor,
    ZeroRecurrenceDenominator,
)
from .params import validate_params

__all__ = [
    "SymPolynomial",
    "explicit_poly",
    "monic_poly",
    "recurrence_coefficient",
    "recurrence_coefficients",
    "recurrence_poly",
    "eval_recurrence",
    "eval_hypergeometric",
    "boundary_value",
    "ode_residual",
]


@dataclass(frozen=True)
class SymPolynomial:
    """A polynomial of definite parity, ``sum_k coeffs[k] * x**(n - 2k)``."""

    n: int
    coeffs: tuple
    monic: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("degree must be nonnegative")
        coeffs = tuple(float(c) for c in self.coeffs)
        if len(coeffs) != self.n // 2 + 1:
            raise ValueError(
                f"degree {self.n} needs {self.n // 2 + 1} coefficients, got {len(coeffs)}"
            )
        if self.monic and coeffs[0] != 1.0:
            raise ValueError("monic polynomial must have leading coefficient 1")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def parity(self):
        return self.n % 2

    def __call__(self, x):
        """Evaluate at ``x``.

        Scalars go through a compensated sum of the individual terms; arrays
        use Horner's scheme in ``x**2``.
        """
        if np.ndim(x) == 0:
            x = float(x)
            return math.fsum(c * x ** (self.n - 2 * k) for k, c in enumerate(self.coeffs))
        x = np.asarray(x, dtype=float)
        y = x * x
        acc = np.full_like(x, self.coeffs[0])
        for c in self.coeffs[1:]:
            acc = acc * y + c
        return acc * x if self.n % 2 else acc

    def derivative(self):
        """Exact derivative, itself symmetric of degree ``n - 1``."""
        if self.n == 0:
            return SymPolynomial(0, (0.0,))
        coeffs = [c * (self.n - 2 * k) for k, c in enumerate(self.coeffs) if self.n - 2 * k > 0]
        return SymPolynomial(self.n - 1, coeffs)

    def reversed_call(self, u):
        """``u**n * P(1/u)``, which is a smooth even polynomial in ``u``."""
        if np.ndim(u) == 0:
            u = float(u)
            return math.fsum(c * u ** (2 * k) for k, c in enumerate(self.coeffs))
        u = np.asarray(u, dtype=float)
        y = u * u
        acc = np.full_like(u, self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            acc = acc * y + c
        return acc

    def power_coeffs(self):
        """Dense ascending power-basis coefficients (length ``n + 1``)."""
        out = np.zeros(self.n + 1)
        for k, c in enumerate(self.coeffs):
            out[self.n - 2 * k] = c
        return out

    def to_json(self):
        return {"n": self.n, "coeffs": list(self.coeffs), "monic": self.monic}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["n"]), data["coeffs"], bool(data.get("monic", False)))


def _linear_forms(v, n):
    """Numerator forms in (p, r) and denominator forms in (q, s) of the explicit sum."""
    m = n // 2
    e = 1 if n % 2 else -1
    num = [(2 * i + e + 2 * m) * v.p + v.r for i in range(m)]
    den = [(2 * i + e + 2) * v.q + v.s for i in range(m)]
    return num, den


def explicit_poly(v, n):
    """Explicit (non-monic) polynomial, normalized so the lowest term is ``x**(n % 2)``.

    Raises
    ------
    ZeroDenominator
        if some ``(2i + (-1)**(n+1) + 2) q + s`` vanishes.
    """
    validate_params(v)
    if n < 0:
        raise ValueError("degree must be nonnegative")
    m = n // 2
    num, den = _linear_forms(v, n)
    for i, d in enumerate(den):
        if d == 0:
            raise ZeroDenominator(i, n)
    coeffs = []
    for k in range(m + 1):
        c = float(math.comb(m, k))
        for i in range(m - k):
            c *= num[i] / den[i]
        coeffs.append(c)
    return SymPolynomial(n, coeffs, monic=False)


def monic_poly(v, n):
    """Monic polynomial S̄_n.

    Each coefficient is built directly as a product of ratios of the
    (q, s) and (p, r) forms, so it stays defined when the non-monic sum
    has a vanishing (q, s) form.

    Raises
    ------
    ZeroLeadingFactor
        if some ``(2i + (-1)**(n+1) + 2*(n//2)) p + r`` vanishes.
    """
    validate_params(v)
    if n < 0:
        raise ValueError("degree must be nonnegative")
    m = n // 2
    num, den = _linear_forms(v, n)
    for i, f in enumerate(num):
        if f == 0:
            raise ZeroLeadingFactor(i, n)
    coeffs = []
    for k in range(m + 1):
        c = float(math.comb(m, k))
        for i in range(m - k, m):
            c *= den[i] / num[i]
        coeffs.append(c)
    return SymPolynomial(n, coeffs, monic=True)


def _second_monic_coeff(v, n):
    if n < 2:
        return 0.0
    return monic_poly(v, n).coeffs[1]


def recurrence_coefficient(v, n):
    """Closed-form coefficient ``C_n`` of ``S̄_{n+1} = x S̄_n + C_n S̄_{n-1}``.

    When the closed form degenerates to 0/0 (e.g. ``n = 1`` for the first
    kind Chebyshev vector), or comes within rounding of it, the removable
    singularity is resolved through the identity ``C_n = c̄_1(n+1) - c̄_1(n)``
    on the second monic coefficients.
    """
    validate_params(v)
    if n < 1:
        raise ValueError("recurrence index starts at 1")
    p, q, r, s = v.as_tuple()
    sign = -1.0 if n % 2 else 1.0  # (-1)**n
    odd = 1.0 if n % 2 else 0.0  # (1 - (-1)**n) / 2
    numer = p * q * n * n + ((r - 2 * p) * q - sign * p * s) * n + (r - 2 * p) * s * odd
    denom = (2 * p * n + r - p) * (2 * p * n + r - 3 * p)
    dscale = (abs(2 * p * n) + abs(r) + 3 * abs(p)) ** 2
    if abs(denom) > _NEAR_SINGULAR * dscale:
        return numer / denom
    try:
        return _second_monic_coeff(v, n + 1) - _second_monic_coeff(v, n)
    except ZeroLeadingFactor:
        pass
    if denom != 0:
        return numer / denom
    raise ZeroRecurrenceDenominator(n)


_NEAR_SINGULAR = 1e-10


def recurrence_coefficients(v, n_max):
    """``[C_1, ..., C_{n_max}]``."""
    return [recurrence_coefficient(v, k) for k in range(1, n_max + 1)]


def recurrence_poly(v, n):
    """Monic S̄_n expanded coefficientwise through the three-term recurrence."""
    prev = [1.0]  # S̄_0
    if n == 0:
        return SymPolynomial(0, prev, monic=True)
    cur = [1.0]  # S̄_1
    for k in range(1, n):
        c = recurrence_coefficient(v, k)
        nxt = list(cur) + [0.0] * ((k + 1) // 2 + 1 - len(cur))
        for j, b in enumerate(prev):
            nxt[j + 1] += c * b
        prev, cur = cur, nxt
    return SymPolynomial(n, cur, monic=True)


def eval_recurrence(v, n, x):
    """Value of S̄_n at ``x`` by the forward recurrence from S̄_0 = 1, S̄_1 = x."""
    if n == 0:
        return np.ones_like(x, dtype=float) if np.ndim(x) else 1.0
    prev, cur = (np.ones_like(x, dtype=float) if np.ndim(x) else 1.0), x
    for k in range(1, n):
        prev, cur = cur, x * cur + recurrence_coefficient(v, k) * prev
    return cur * 1.0


def _hyper_params(v, n):
    m = n // 2
    beta = (v.q - v.s) / (2 * v.q) - (n + 1) // 2
    gamma = -(v.r + (2 * n - 3) * v.p) / (2 * v.p)
    return m, beta, gamma


def eval_hypergeometric(v, n, x):
    """S̄_n(x) from its terminating 2F1 representation in ``-q / (p x**2)``."""
    validate_params(v)
    if v.p == 0 or v.q == 0:
        raise HypergeometricDomain("the 2F1 form needs p != 0 and q != 0")
    x = float(x)
    if x == 0:
        raise HypergeometricDomain("the 2F1 form is singular at x = 0")
    m, beta, gamma = _hyper_params(v, n)
    z = -v.q / (v.p * x * x)
    term = 1.0
    terms = [term]
    for k in range(m):
        if gamma + k == 0:
            raise HypergeometricDomain(f"lower parameter {gamma} is a non-positive integer")
        term *= (-m + k) * (beta + k) / ((gamma + k) * (k + 1)) * z
        terms.append(term)
    return x ** n * math.fsum(terms)


def boundary_value(v, n):
    """S̄_n at the boundary point ``sqrt(-q/p)``.

    Uses the Chu-Vandermonde form ``(gamma - beta)_m / (gamma)_m`` of the
    Gauss sum, which never forms a Gamma pole-over-pole ratio.
    """
    validate_params(v)
    if v.p == 0 or not (-v.q / v.p > 0):
        raise BoundaryUndefined("boundary point needs p != 0 and -q/p > 0")
    m, beta, gamma = _hyper_params(v, n)
    ratio = 1.0
    for j in range(m):
        if gamma + j == 0:
            raise GammaPole(f"Pochhammer ({gamma})_{m} vanishes")
        ratio *= (gamma - beta + j) / (gamma + j)
    return (-v.q / v.p) ** (n / 2) * ratio


def ode_residual(v, n, x, monic=True):
    """Left-hand side of the governing second-order ODE for S_n at ``x``.

    ``x^2 (p x^2 + q) y'' + x (r x^2 + s) y' - (n (r + (n-1) p) x^2 + (1 - (-1)^n) s / 2) y``

    Derivatives come from the coefficient sequence, never from differences.
    """
    poly = monic_poly(v, n) if monic else explicit_poly(v, n)
    d1 = poly.derivative()
    d2 = d1.derivative()
    p, q, r, s = v.as_tuple()
    x2 = x * x
    odd = s if n % 2 else 0.0
    return (
        x2 * (p * x2 + q) * d2(x)
        + x * (r * x2 + s) * d1(x)
        - (n * (r + (n - 1) * p) * x2 + odd) * poly(x)
    )
