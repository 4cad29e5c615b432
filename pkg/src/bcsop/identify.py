"""Recover ``(p, q, r, s)`` from a weight's log-derivative or from recurrence data."""

from __future__ import annotations

import ast
import math
import operator
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial

from .errors import (
    AmbiguousSolution,
    NoSolution,
    PatternMismatch,
    VerificationFailed,
    ZeroRecurrenceDenominator,
)
from .params import ParamVector, validate_params
from .poly import recurrence_coefficient
from .weights import Transform

__all__ = [
    "LogDerivSpec",
    "params_from_logderiv",
    "params_from_recurrence",
    "recurrence_equations",
    "parse_cn_template",
]


@dataclass(frozen=True)
class LogDerivSpec:
    """``W'(x)/W(x) = num(x)/den(x)``, coefficients in ascending powers.

    If ``transform`` is given the polynomials are in the user's variable ``x``
    and the symmetric variable is ``t = w x + v``.
    """

    num: tuple
    den: tuple
    transform: Transform | None = None

    def __post_init__(self):
        object.__setattr__(self, "num", tuple(float(c) for c in self.num))
        object.__setattr__(self, "den", tuple(float(c) for c in self.den))
        if not any(self.den):
            raise ValueError("denominator is identically zero")

    @classmethod
    def from_polynomial_weight(cls, coeffs, transform=None):
        """Log-derivative ``W'/W`` of a polynomial weight."""
        W = Polynomial(coeffs)
        return cls(tuple(W.deriv().coef), tuple(W.coef), transform)

    def to_json(self):
        t = None if self.transform is None else [self.transform.w, self.transform.v]
        return {"num": list(self.num), "den": list(self.den), "transform": t}

    @classmethod
    def from_json(cls, data):
        t = data.get("transform")
        if isinstance(t, Mapping):
            t = Transform(t["w"], t["v"])
        elif t is not None:
            t = Transform(*t)
        return cls(data["num"], data["den"], t)


def _trim(P, tol):
    c = np.array(P.coef, dtype=float)
    scale = np.max(np.abs(c)) if c.size else 0.0
    c[np.abs(c) <= tol * scale] = 0.0
    nz = np.nonzero(c)[0]
    return Polynomial(c[: nz[-1] + 1] if nz.size else [0.0])


def _degree(P):
    nz = np.nonzero(P.coef)[0]
    return int(nz[-1]) if nz.size else -1


def _cancel_common(num, den, tol):
    """Remove factors shared by ``num`` and ``den``, one root at a time."""
    changed = True
    while changed and _degree(den) > 0 and _degree(num) > 0:
        changed = False
        nscale = np.max(np.abs(num.coef))
        for rho in den.roots():
            if abs(num(rho)) > tol * nscale * max(1.0, abs(rho)) ** _degree(num):
                continue
            if abs(rho.imag) <= tol * max(1.0, abs(rho)):
                factor = Polynomial([-rho.real, 1.0])
            else:
                factor = Polynomial([abs(rho) ** 2, -2 * rho.real, 1.0])
            num = _trim(num // factor, tol)
            den = _trim(den // factor, tol)
            changed = True
            break
    return num, den


def params_from_logderiv(spec, tol=1e-10):
    """Match ``num/den`` against ``((r - 2p) t^2 + s) / (p t^3 + q t)``.

    Common factors are cancelled first, so unreduced input such as ``W'`` and
    ``W`` of a polynomial weight is accepted. The returned vector is the raw
    match; its scale follows the input.

    Raises
    ------
    PatternMismatch
        if the reduced pair is not of that shape.
    DegenerateParameters
        if the matched vector has ``q = s = 0`` or ``p = r = 0``.
    """
    num, den = Polynomial(spec.num), Polynomial(spec.den)
    if spec.transform is not None:
        w, v = spec.transform.w, spec.transform.v
        if w == 0:
            raise ValueError("transform scale must be nonzero")
        back = Polynomial([-v / w, 1.0 / w])
        num, den = num(back), w * den(back)
    num, den = _trim(num, tol), _trim(den, tol)
    num, den = _cancel_common(num, den, tol)

    nd, dd = _degree(num), _degree(den)
    # bring to the form x * (p x^2 + q): multiply by x if den is even
    if dd in (0, 2) and np.all(den.coef[1::2] == 0):
        num, den = num * Polynomial([0, 1]), den * Polynomial([0, 1])
        nd, dd = nd + 1, dd + 1
    if dd not in (1, 3) or nd > 2:
        raise PatternMismatch(f"denominator degree {dd}, numerator degree {nd}")
    dc = np.zeros(4)
    dc[: dd + 1] = den.coef[: dd + 1]
    nc = np.zeros(3)
    if nd >= 0:
        nc[: nd + 1] = num.coef[: nd + 1]
    if dc[0] != 0 or dc[2] != 0:
        raise PatternMismatch("denominator is not odd with a zero at the origin")
    if nc[1] != 0:
        raise PatternMismatch("numerator is not even")
    p, q = dc[3], dc[1]
    result = ParamVector(p, q, nc[2] + 2 * p, nc[0])
    validate_params(result)
    return result


def _coefficient_getter(C):
    if callable(C):
        return C
    if isinstance(C, Mapping):
        return lambda n: C[n]
    if isinstance(C, Sequence) or isinstance(C, np.ndarray):
        seq = list(C)
        return lambda n: seq[n - 1]
    raise TypeError("C must be a mapping, a sequence starting at C_1, or a callable")


def recurrence_equations(cvals, degrees):
    """Rows of the linear system in ``(p, q, r, s)`` for the given degrees.

    Degree ``n`` with ``m = n // 2`` and ``e = (-1)^(n+1)`` gives
    ``m((2m + e) q + s) - sigma_n ((4m - 2 + e) p + r) = 0`` where
    ``sigma_n = C_1 + ... + C_{n-1}``.
    """
    rows = []
    for n in degrees:
        m = n // 2
        e = 1 if n % 2 else -1
        sigma = math.fsum(cvals[i] for i in range(1, n))
        rows.append([-sigma * (4 * m - 2 + e), m * (2 * m + e), -sigma, m])
    return np.array(rows, dtype=float)


def _null_space(A, rank_tol):
    A = A / np.maximum(np.linalg.norm(A, axis=1, keepdims=True), 1e-300)
    _, sv, vt = np.linalg.svd(A)
    sv = np.concatenate([sv, np.zeros(4 - sv.size)])
    small = sv <= rank_tol * sv[0]
    return vt[small], sv


_SNAP = 1e-12


def params_from_recurrence(C, probe_count=None, tol=1e-9, rank_tol=1e-9):
    """Identify the vector whose recurrence coefficients are ``C_1, C_2, ...``.

    Parameters
    ----------
    C : mapping, sequence or callable
        Supplies ``C_n`` for ``n = 1 .. probe_count``; sequences start at ``C_1``.
    probe_count : int, optional
        Number of coefficients used; at least 4. Defaults to the sequence
        length, or 8 for mappings and callables. Degrees 2 to 5 set up the
        linear system; the extra coefficients resolve rank deficiency and are
        all checked against the candidate.

    Returns
    -------
    ParamVector
        Canonical representative of the solution.

    Raises
    ------
    NoSolution
        if the system has only the trivial solution.
    AmbiguousSolution
        if a multi-dimensional family remains.
    VerificationFailed
        if the candidate does not reproduce some ``C_n`` within ``tol``.
    """
    if probe_count is None:
        probe_count = len(C) if isinstance(C, (Sequence, np.ndarray)) else 8
    if probe_count < 4:
        raise ValueError("probe_count must be at least 4")
    get = _coefficient_getter(C)
    try:
        cvals = {n: float(get(n)) for n in range(1, probe_count + 1)}
    except (IndexError, KeyError) as exc:
        raise ValueError(f"C_n needed for n = 1 .. {probe_count}") from exc

    basis, sv = _null_space(recurrence_equations(cvals, range(2, 6)), rank_tol)
    if len(basis) > 1 and probe_count > 4:
        basis, sv = _null_space(recurrence_equations(cvals, range(2, probe_count + 2)), rank_tol)
    if len(basis) == 0:
        raise NoSolution(f"trivial null space (smallest singular value ratio {sv[-1] / sv[0]:.3g})")
    if len(basis) > 1:
        raise AmbiguousSolution(
            f"{len(basis)}-dimensional solution family", [ParamVector(*row) for row in basis]
        )

    row = basis[0] / np.max(np.abs(basis[0]))
    row[np.abs(row) <= _SNAP] = 0.0
    cand = ParamVector(*row)
    validate_params(cand)
    for n in range(1, probe_count + 1):
        try:
            got = recurrence_coefficient(cand, n)
        except ZeroRecurrenceDenominator:
            got = math.nan
        if not abs(got - cvals[n]) <= tol * max(1.0, abs(cvals[n])):
            raise VerificationFailed(n, cvals[n], got)
    return cand.canonical()


_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}
_UNARY = {ast.USub: operator.neg, ast.UAdd: operator.pos}


def parse_cn_template(expr):
    """Compile an arithmetic expression in ``n`` (``+ - * / **``, parentheses) to a callable."""
    tree = ast.parse(expr, mode="eval")

    def ev(node, n):
        if isinstance(node, ast.Expression):
            return ev(node.body, n)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return node.value
        if isinstance(node, ast.Name) and node.id == "n":
            return n
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left, n), ev(node.right, n))
        if isinstance(node, ast.UnaryOp) and type(node.op) in _UNARY:
            return _UNARY[type(node.op)](ev(node.operand, n))
        raise ValueError(f"unsupported expression element: {ast.dump(node)}")

    ev(tree, 1)  # reject bad syntax early
    return lambda n: float(ev(tree, n))
