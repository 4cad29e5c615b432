"""Gauss quadrature rules from the three-term recurrence (Golub-Welsch)."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgError, eigh_tridiagonal

from .errors import EigenFailure, PositivityViolated, ZeroRecurrenceDenominator
from .poly import recurrence_coefficient

__all__ = ["QuadratureRule", "jacobi_matrix", "gauss_rule", "integrate", "recurrence_nodes"]


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray
    mass: float

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if nodes.shape != weights.shape or nodes.ndim != 1:
            raise ValueError("nodes and weights must be 1-d arrays of equal length")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    def __len__(self):
        return len(self.nodes)

    def __call__(self, f):
        return integrate(self, f)

    def to_json(self):
        return {"mass": self.mass, "nodes": self.nodes.tolist(), "weights": self.weights.tolist()}

    @classmethod
    def from_json(cls, data):
        return cls(data["nodes"], data["weights"], data["mass"])

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["node", "weight"])
        for x, w in zip(self.nodes, self.weights):
            writer.writerow([f"{x:.17g}", f"{w:.17g}"])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text, mass=None):
        rows = list(csv.DictReader(io.StringIO(text)))
        nodes = [float(r["node"]) for r in rows]
        weights = [float(r["weight"]) for r in rows]
        return cls(nodes, weights, math.fsum(weights) if mass is None else mass)


def _offdiagonals(v, n):
    out = np.empty(max(n - 1, 0))
    for k in range(1, n):
        try:
            beta = -recurrence_coefficient(v, k)
        except ZeroRecurrenceDenominator:
            raise PositivityViolated(k, math.nan) from None
        if not beta > 0:
            raise PositivityViolated(k, beta)
        out[k - 1] = math.sqrt(beta)
    return out


def jacobi_matrix(v, n):
    """Symmetric tridiagonal Jacobi matrix: zero diagonal, off-diagonal ``sqrt(-C_k)``."""
    if n < 1:
        raise ValueError("matrix size must be positive")
    e = _offdiagonals(v, n)
    return np.diag(e, 1) + np.diag(e, -1)


def _eig(e, n, vectors):
    try:
        return eigh_tridiagonal(np.zeros(n), e, eigvals_only=not vectors)
    except (LinAlgError, ValueError) as exc:
        raise EigenFailure(str(exc)) from exc


def recurrence_nodes(v, n):
    """Zeros of S̄_n as Jacobi-matrix eigenvalues, ascending and symmetrized."""
    e = _offdiagonals(v, n)
    return _symmetrize(_eig(e, n, False))


def _symmetrize(x):
    x = np.sort(np.asarray(x, dtype=float))
    x = 0.5 * (x - x[::-1])
    if len(x) % 2:
        x[len(x) // 2] = 0.0
    return x


def gauss_rule(v, n, mass=None):
    """``n``-point Gauss rule for the weight of ``v``.

    ``mass`` defaults to the closed-form total mass of the weight.

    Raises
    ------
    PositivityViolated
        if some ``-C_k <= 0`` for ``k < n``; no rule with complex or negative
        weights is ever returned.
    """
    if mass is None:
        from .ortho import total_mass
        from .weights import weight_closed_form

        mass = total_mass(weight_closed_form(v))
    if n < 1:
        raise ValueError("rule size must be positive")
    e = _offdiagonals(v, n)
    if n == 1:
        return QuadratureRule([0.0], [mass], mass)
    vals, vecs = _eig(e, n, True)
    order = np.argsort(vals)
    nodes = _symmetrize(vals[order])
    w = mass * vecs[0, order] ** 2
    w = 0.5 * (w + w[::-1])
    return QuadratureRule(nodes, w, mass)


def integrate(rule, f):
    """``sum_i w_i f(x_i)``."""
    values = np.array([f(x) for x in rule.nodes], dtype=float)
    return math.fsum(rule.weights * values)
