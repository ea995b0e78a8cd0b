"""Independent brute-force checks: polynomial evaluation by recurrence and
Gauss-Legendre quadrature of the defining transform integrals.

Nothing here touches the coefficient tables or the regime-split evaluators,
so agreement between `quad_transform` and `transforms` validates both sides.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .coeffs import Family, as_family

__all__ = [
    "QuadratureRule",
    "eval_chebyshev",
    "eval_legendre",
    "gauss_legendre_rule",
    "quad_transform",
]

_MAX_QUAD_ORDER = 4096


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre nodes/weights on (-1, 1); exact through degree 2*order-1."""

    nodes: np.ndarray
    weights: np.ndarray
    order: int


def _recurrence_values(m: int, x: np.ndarray, chebyshev: bool) -> np.ndarray:
    if m == 0:
        return np.ones_like(x)
    prev = np.ones_like(x)
    cur = np.asarray(x, dtype=float).copy()
    for k in range(1, m):
        if chebyshev:
            prev, cur = cur, 2.0 * x * cur - prev
        else:
            prev, cur = cur, ((2 * k + 1) * x * cur - k * prev) / (k + 1)
    return cur


def _checked_input(x) -> tuple[np.ndarray, bool]:
    arr = np.asarray(x, dtype=float)
    if not np.all(np.abs(arr) <= 1.0):  # also rejects NaN
        raise ValueError("argument outside [-1, 1]")
    return arr, np.isscalar(x) or arr.ndim == 0


def eval_chebyshev(m: int, x):
    """T_m(x) on [-1, 1] by the three-term recurrence."""
    if m < 0:
        raise ValueError("degree must be non-negative")
    arr, scalar = _checked_input(x)
    vals = _recurrence_values(m, arr, chebyshev=True)
    return float(vals) if scalar else vals


def eval_legendre(m: int, x):
    """P_m(x) on [-1, 1] by the three-term recurrence."""
    if m < 0:
        raise ValueError("degree must be non-negative")
    arr, scalar = _checked_input(x)
    vals = _recurrence_values(m, arr, chebyshev=False)
    return float(vals) if scalar else vals


@lru_cache(maxsize=256)
def _rule(order: int) -> QuadratureRule:
    # Newton iteration on recurrence-evaluated P_order, started from the
    # Tricomi asymptotic approximation of the roots.
    n = order
    k = np.arange(1, n + 1)
    theta = math.pi * (4 * k - 1) / (4 * n + 2)
    x = (1.0 - (n - 1) / (8.0 * n**3)) * np.cos(theta)
    for _ in range(100):
        p_prev = np.ones_like(x)
        p = x.copy()
        for j in range(1, n):
            p_prev, p = p, ((2 * j + 1) * x * p - j * p_prev) / (j + 1)
        dp = n * (x * p - p_prev) / (x * x - 1.0)
        dx = p / dp
        x -= dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    else:
        raise RuntimeError("node iteration failed to converge")
    p_prev = np.ones_like(x)
    p = x.copy()
    for j in range(1, n):
        p_prev, p = p, ((2 * j + 1) * x * p - j * p_prev) / (j + 1)
    dp = n * (x * p - p_prev) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    idx = np.argsort(x)
    nodes = x[idx]
    weights = w[idx]
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(nodes, weights, n)


def gauss_legendre_rule(order: int) -> QuadratureRule:
    """Nodes and weights of the order-point Gauss-Legendre rule."""
    if order < 1:
        raise ValueError("order must be positive")
    return _rule(order)


def _integrate(family: Family, m: int, lam: complex, order: int) -> tuple[complex, float]:
    rule = gauss_legendre_rule(order)
    poly = _recurrence_values(m, rule.nodes, chebyshev=family is Family.CHEBYSHEV)
    samples = rule.weights * poly * np.exp(-1j * lam * rule.nodes)
    return complex(np.sum(samples)), float(np.sum(np.abs(samples)))


def quad_transform(family: Family | str, m: int, lam: complex) -> complex:
    """Transform integral by quadrature, with an internal doubling check.

    The starting order grows with |lam| because the exponential oscillates
    ~|lam|/pi times across the interval.  Convergence is judged against the
    integral of |integrand|, the scale roundoff actually permits (for
    imaginary lam the result can sit far below the integrand's peak).
    Raises if order 4096 is still not converged to ~1e-13.
    """
    fam = as_family(family)
    lam = complex(lam)
    order = max(40, m + math.ceil(abs(lam)) + 20)
    value, _ = _integrate(fam, m, lam, order)
    while True:
        order *= 2
        if order > _MAX_QUAD_ORDER:
            raise RuntimeError("quadrature failed to converge by order 4096")
        refined, mass = _integrate(fam, m, lam, order)
        if abs(refined - value) <= 1e-13 * (1.0 + abs(refined) + mass):
            return refined
        value = refined
