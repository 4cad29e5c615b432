"""Parameter vectors (p, q, r, s) and the registry of named sub-classes."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import DegenerateParameters

__all__ = [
    "ParamVector",
    "SubclassTag",
    "Verdict",
    "validate_params",
    "params_equivalent",
    "subclass_vector",
    "odd_shift",
    "TAGS",
]


@dataclass(frozen=True)
class ParamVector:
    """The four reals defining one member of the polynomial class.

    ``p`` and ``q`` are the coefficients of the quartic factor
    ``x**2 * (p*x**2 + q)`` of the leading ODE coefficient, ``r`` and ``s``
    the coefficients of the odd drift ``x*(r*x**2 + s)``.

    Construction does not validate; use :func:`validate_params`.
    """

    p: float
    q: float
    r: float
    s: float

    def __post_init__(self):
        for name in ("p", "q", "r", "s"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    def __iter__(self):
        return iter((self.p, self.q, self.r, self.s))

    def as_tuple(self):
        return (self.p, self.q, self.r, self.s)

    def scaled(self, lam):
        return ParamVector(lam * self.p, lam * self.q, lam * self.r, lam * self.s)

    def canonical(self):
        """Display form: max |component| is 1 and the first nonzero one is positive.

        Only meant for printing; all arithmetic uses the raw vector.
        """
        comps = self.as_tuple()
        big = max(abs(c) for c in comps)
        if big == 0:
            return self
        first = next(c for c in comps if c != 0)
        sign = math.copysign(1.0, first)
        # dividing (not multiplying by 1/big) keeps the largest entry exactly 1
        return ParamVector(*(sign * (c / big) + 0.0 for c in comps))

    def to_json(self):
        return [self.p, self.q, self.r, self.s]

    @classmethod
    def from_json(cls, data):
        if len(data) != 4:
            raise ValueError(f"expected [p, q, r, s], got {data!r}")
        return cls(*data)

    @classmethod
    def parse(cls, text):
        """Parse ``"p,q,r,s"``."""
        parts = [t for t in text.replace(" ", "").split(",") if t]
        if len(parts) != 4:
            raise ValueError(f"expected four comma-separated numbers, got {text!r}")
        return cls(*(float(t) for t in parts))


# tag name -> (needs a, needs b)
TAGS = {
    "gup": (True, True),
    "ghp": (True, False),
    "finite_algebraic": (True, True),
    "finite_exponential": (True, False),
    "chebyshev5": (False, False),
    "chebyshev6": (False, False),
    "T": (False, False),
    "U": (False, False),
    "legendre": (False, False),
    "gegenbauer": (True, False),
    "hermite": (False, False),
}

_ALIASES = {
    "fifth": "chebyshev5",
    "chebyshev_fifth": "chebyshev5",
    "sixth": "chebyshev6",
    "chebyshev_sixth": "chebyshev6",
    "t": "T",
    "u": "U",
    "finitealgebraic": "finite_algebraic",
    "finiteexponential": "finite_exponential",
}


@dataclass(frozen=True)
class SubclassTag:
    """A named sub-class with its shape parameters ``a`` and ``b``."""

    tag: str
    a: Optional[float] = None
    b: Optional[float] = None

    def __post_init__(self):
        key = self.tag if self.tag in TAGS else _ALIASES.get(self.tag.lower(), self.tag.lower())
        if key not in TAGS:
            raise ValueError(f"unknown sub-class tag {self.tag!r}")
        object.__setattr__(self, "tag", key)
        need_a, need_b = TAGS[key]
        for name, needed in (("a", need_a), ("b", need_b)):
            value = getattr(self, name)
            if needed and value is None:
                raise ValueError(f"sub-class {key!r} requires parameter {name}")
            if not needed and value is not None:
                raise ValueError(f"sub-class {key!r} takes no parameter {name}")
            if value is not None:
                object.__setattr__(self, name, float(value))

    def constraint_warnings(self):
        """Table-row constraints that the shape parameters violate (possibly empty)."""
        a, b = self.a, self.b
        checks = {
            "gup": [("a > -1/2", a is not None and a > -0.5), ("b > -1", b is not None and b > -1)],
            "ghp": [("a > -1/2", a > -0.5)] if a is not None else [],
            "finite_algebraic": [
                ("a < 1/2", a < 0.5),
                ("b > 0", b > 0),
                ("a + b > 1/2", a + b > 0.5),
            ] if a is not None and b is not None else [],
            "finite_exponential": [("a > 1/2", a > 0.5)] if a is not None else [],
            "gegenbauer": [("a > -1/2", a > -0.5)] if a is not None else [],
        }.get(self.tag, [])
        return tuple(name for name, ok in checks if not ok)

    def to_json(self):
        out = {"tag": self.tag}
        if self.a is not None:
            out["a"] = self.a
        if self.b is not None:
            out["b"] = self.b
        return out

    @classmethod
    def from_json(cls, data):
        return cls(data["tag"], data.get("a"), data.get("b"))


@dataclass(frozen=True)
class Verdict:
    valid: bool
    failed_pair: Optional[str] = None
    warnings: tuple = field(default_factory=tuple)

    def __bool__(self):
        return self.valid


def _failed_pair(v):
    if v.q == 0 and v.s == 0:
        return "q,s"
    if v.p == 0 and v.r == 0:
        return "p,r"
    return None


def validate_params(v, raise_on_error=True):
    """Check that neither (q, s) nor (p, r) vanish together.

    Raises :class:`DegenerateParameters` by default; with
    ``raise_on_error=False`` a failing :class:`Verdict` is returned instead.
    """
    pair = _failed_pair(v)
    if pair is not None:
        if raise_on_error:
            raise DegenerateParameters(pair, v)
        return Verdict(False, pair)
    return Verdict(True)


def params_equivalent(v1, v2, rtol=1e-12):
    """True iff ``v2 == lam * v1`` for some nonzero ``lam``."""
    validate_params(v1)
    validate_params(v2)
    a = v1.as_tuple()
    b = v2.as_tuple()
    scale = max(abs(x) for x in a) * max(abs(y) for y in b)
    for i in range(4):
        for j in range(i + 1, 4):
            if abs(a[i] * b[j] - a[j] * b[i]) > rtol * scale:
                return False
    return True


def subclass_vector(tag):
    """Initial vector of a named sub-class, exactly as tabulated.

    Shape-parameter constraints are not enforced here; see
    :meth:`SubclassTag.constraint_warnings`.
    """
    if isinstance(tag, str):
        tag = SubclassTag(tag)
    a, b = tag.a, tag.b
    t = tag.tag
    if t == "gup":
        return ParamVector(-1, 1, -2 * a - 2 * b - 2, 2 * a)
    if t == "ghp":
        return ParamVector(0, 1, -2, 2 * a)
    if t == "finite_algebraic":
        return ParamVector(1, 1, -2 * a - 2 * b + 2, -2 * a)
    if t == "finite_exponential":
        return ParamVector(1, 0, -2 * a + 2, 2)
    if t == "chebyshev5":
        return ParamVector(-1, 1, -3, 2)
    if t == "chebyshev6":
        return ParamVector(-1, 1, -5, 2)
    if t == "T":
        return ParamVector(-1, 1, -1, 0)
    if t == "U":
        return ParamVector(-1, 1, -3, 0)
    if t == "legendre":
        return ParamVector(-1, 1, -2, 0)
    if t == "gegenbauer":
        return ParamVector(-1, 1, -2 * a - 1, 0)
    if t == "hermite":
        return ParamVector(0, 1, -2, 0)
    raise ValueError(f"unknown sub-class tag {t!r}")


def odd_shift(v):
    """Vector whose even members give the odd members of ``v``.

    ``S_{2n+1}(v; x) == x * S_{2n}(odd_shift(v); x)``.
    """
    validate_params(v)
    shifted = ParamVector(v.p, v.q, v.r + 2 * v.p, v.s + 2 * v.q)
    validate_params(shifted)
    return shifted
