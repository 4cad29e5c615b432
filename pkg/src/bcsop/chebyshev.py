"""Fifth and sixth kind Chebyshev polynomials and the classical special cases."""

from __future__ import annotations

import enum
import math

import numpy as np

from .errors import OddDegreeUnsupported, TrigPole
from .params import ParamVector
from .poly import explicit_poly, monic_poly, recurrence_coefficient

__all__ = [
    "Cheb56Kind",
    "cheb56_poly",
    "cheb56_trig_eval",
    "cheb56_roots",
    "cheb56_roots_csv",
    "classical_eval",
    "nevai_limit_check",
]


class Cheb56Kind(enum.Enum):
    FIFTH = "fifth"
    SIXTH = "sixth"

    @property
    def vector(self):
        if self is Cheb56Kind.FIFTH:
            return ParamVector(-1, 1, -3, 2)
        return ParamVector(-1, 1, -5, 2)

    @property
    def weight_formula(self):
        return "x^2 / sqrt(1 - x^2)" if self is Cheb56Kind.FIFTH else "x^2 sqrt(1 - x^2)"


def _kind(kind):
    return kind if isinstance(kind, Cheb56Kind) else Cheb56Kind(str(kind).lower())


def cheb56_poly(kind, n, monic=True):
    kind = _kind(kind)
    return monic_poly(kind.vector, n) if monic else explicit_poly(kind.vector, n)


# the singularity is removable, but near it the quotient loses all accuracy
_POLE_TOL = 1e-12


def cheb56_trig_eval(kind, n, theta):
    """Trigonometric closed form of the even members at ``x = cos(theta)``.

    Fifth kind: ``(-1)^{n/2} cos((n+1) t) / ((n+1) cos t)``;
    sixth kind: ``(-1)^{n/2} sin((n+2) t) / ((n+2) cos t sin t)``.
    Both equal the explicit (non-monic) polynomial, whose constant term is 1.
    """
    kind = _kind(kind)
    if n % 2 or n < 0:
        raise ValueError("trigonometric form exists for even n only")
    sign = -1.0 if (n // 2) % 2 else 1.0
    c = math.cos(theta)
    if kind is Cheb56Kind.FIFTH:
        if abs(c) <= _POLE_TOL:
            raise TrigPole(f"cos(theta) vanishes at theta={theta}")
        return sign * math.cos((n + 1) * theta) / ((n + 1) * c)
    sn = math.sin(theta)
    if abs(c) <= _POLE_TOL or abs(sn) <= _POLE_TOL:
        raise TrigPole(f"cos(theta) sin(theta) vanishes at theta={theta}")
    return sign * math.sin((n + 2) * theta) / ((n + 2) * c * sn)


def _root_angles(kind, degree):
    half = degree // 2
    if kind is Cheb56Kind.FIFTH:
        return [(k, (2 * k - 1) * math.pi / (2 * (2 * half + 1))) for k in range(1, 2 * half + 2) if k != half + 1]
    return [(k, k * math.pi / (2 * half + 2)) for k in range(1, 2 * half + 2) if k != half + 1]


def cheb56_roots(kind, degree):
    """Zeros of the monic polynomial of even ``degree``, ascending.

    The index ``k = n + 1`` (angle pi/2) is excluded, since ``cos(theta)``
    in the closed form's denominator cancels that zero.
    """
    kind = _kind(kind)
    if degree % 2 or degree < 2:
        raise OddDegreeUnsupported(
            f"no closed-form zeros for degree {degree}; use quadrature.recurrence_nodes"
        )
    return np.sort(np.array([math.cos(t) for _, t in _root_angles(kind, degree)]))


def cheb56_roots_csv(kind, degree):
    """Zeros as CSV ``k,node`` sorted by node."""
    kind = _kind(kind)
    if degree % 2 or degree < 2:
        raise OddDegreeUnsupported(f"no closed-form zeros for degree {degree}")
    rows = sorted(((math.cos(t), k) for k, t in _root_angles(kind, degree)))
    lines = ["k,node"] + [f"{k},{x:.17g}" for x, k in rows]
    return "\n".join(lines) + "\n"


_CLASSICAL = {
    "T": ParamVector(-1, 1, -1, 0),
    "U": ParamVector(-1, 1, -3, 0),
    "legendre": ParamVector(-1, 1, -2, 0),
    "hermite": ParamVector(0, 1, -2, 0),
}


def classical_eval(family, n, x, a=None):
    """Classical polynomial in its usual normalization, via the monic member.

    ``family`` is one of ``"T"``, ``"U"``, ``"legendre"``, ``"gegenbauer"``
    (needs ``a``) or ``"hermite"``.
    """
    fam = family if family in ("T", "U") else family.lower()
    if fam in ("t", "u"):
        fam = fam.upper()
    if fam == "gegenbauer":
        if a is None:
            raise ValueError("Gegenbauer polynomials need a")
        if a == 0:
            # C_n^{(0)} vanishes identically for n >= 1
            return np.asarray(x, dtype=float) * 0.0 + (1.0 if n == 0 else 0.0)
        v = ParamVector(-1, 1, -2 * a - 1, 0)
        lead = 2.0**n * math.prod(a + i for i in range(n)) / math.factorial(n)
    elif fam in _CLASSICAL:
        v = _CLASSICAL[fam]
        if fam == "T":
            lead = 2.0 ** (n - 1) if n >= 1 else 1.0
        elif fam == "legendre":
            lead = math.factorial(2 * n) / (math.factorial(n) ** 2 * 2.0**n)
        else:
            lead = 2.0**n
    else:
        raise ValueError(f"unknown classical family {family!r}")
    return lead * monic_poly(v, n)(x)


def nevai_limit_check(v, n_max):
    """``(C_{n_max}, C_{n_max - 1})`` for judging convergence of the recurrence coefficients."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    return recurrence_coefficient(v, n_max), recurrence_coefficient(v, n_max - 1)
