"""Exact integer coefficient tables for the closed-form finite Fourier
transforms of Chebyshev and Legendre polynomials.

For lam != 0 the transform of a degree-m polynomial from either family is

    sum_{n=1}^{m+1} c_n * [e^{i lam} + (-1)^(n+m) e^{-i lam}] / (i lam)^n

with coefficients c_n that are exact integers depending only on the family
and the degree.  This module constructs those integers.  The top Legendre
entry equals the double factorial (2m-1)!!, which leaves 64-bit range near
m = 17, so tables are built in Python's arbitrary-precision integers and
converted to floating point only at evaluation time (see `transforms`).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable

__all__ = [
    "Family",
    "CoefficientTable",
    "as_family",
    "product_range",
    "binom_clamped",
    "chebyshev_coeffs",
    "legendre_coeffs",
    "coefficient_table",
    "coefficients_csv",
    "CSV_HEADER",
]

CSV_HEADER = "family,m,n,coefficient"


class Family(str, Enum):
    """Orthogonal polynomial family on [-1, 1]."""

    CHEBYSHEV = "chebyshev"
    LEGENDRE = "legendre"


def as_family(family: Family | str) -> Family:
    """Normalize a family given as enum member or (case-insensitive) string."""
    if isinstance(family, Family):
        return family
    try:
        return Family(str(family).lower())
    except ValueError:
        raise ValueError(f"unknown polynomial family: {family!r}") from None


@dataclass(frozen=True)
class CoefficientTable:
    """Exact coefficients c_1..c_{m+1} for one polynomial degree.

    ``coeffs[n-1]`` multiplies 1/(i*lam)^n in the closed-form transform.
    """

    family: Family
    degree: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("table must hold exactly m+1 coefficients")


def product_range(s: int, t: int, r: int) -> int:
    """Product of 2(r-k)+1 over k = s..t; empty product (s > t) is 1."""
    value = 1
    for k in range(s, t + 1):
        value *= 2 * (r - k) + 1
    return value


def binom_clamped(s: int, t: int) -> int:
    """Binomial coefficient s!/((s-t)! t!), or 0 outside 0 <= t <= s.

    The zero convention covers both t > s and t < 0; the latter never has a
    combinatorial meaning here but keeps every table branch total.
    """
    if t < 0 or s < t:
        return 0
    return math.comb(s, t)


def _check_degree(m: int) -> None:
    if m < 0:
        raise ValueError("polynomial degree must be non-negative")


@lru_cache(maxsize=None)
def chebyshev_coeffs(m: int) -> CoefficientTable:
    """Exact transform coefficients for the Chebyshev polynomial T_m."""
    _check_degree(m)
    sign = -1 if m % 2 else 1
    entries = [sign]
    if m >= 1:
        entries.append(-sign * m * m)
    for n in range(3, m + 2):
        total = 0
        for k in range(1, m - n + 3):
            prod = 1
            for j in range(k, n + k - 2):
                prod *= m - j
            total += binom_clamped(n + k - 3, k - 1) * prod
        entries.append((-1) ** (m + n - 1) * 2 ** (n - 2) * m * total)
    return CoefficientTable(Family.CHEBYSHEV, m, tuple(entries))


@lru_cache(maxsize=None)
def legendre_coeffs(m: int) -> CoefficientTable:
    """Exact transform coefficients for the Legendre polynomial P_m.

    Index n runs over 1..m+1; each n is produced by exactly one of the three
    construction rules, split by the parity of m+n.
    """
    _check_degree(m)
    entries = []
    for n in range(1, m + 2):
        if (m + n) % 2 == 1:
            if n == 1:
                # m even: the first coefficient is 1.
                entries.append(1)
            else:
                assert (m + n - 3) % 2 == 0
                h = (m + n - 3) // 2
                entries.append(
                    ((m + n) * binom_clamped(h, n - 1) + binom_clamped(h, n - 2))
                    * product_range((m - n + 3) // 2, h, m)
                )
        else:
            assert (m + n) % 2 == 0
            h = (m + n) // 2 - 1
            entries.append(
                -binom_clamped(h, n - 1) * product_range((m - n) // 2 + 1, h, m)
            )
    return CoefficientTable(Family.LEGENDRE, m, tuple(entries))


def coefficient_table(family: Family | str, m: int) -> CoefficientTable:
    """Table for either family; results are cached per (family, degree)."""
    fam = as_family(family)
    if fam is Family.CHEBYSHEV:
        return chebyshev_coeffs(m)
    return legendre_coeffs(m)


def coefficients_csv(tables: CoefficientTable | Iterable[CoefficientTable]) -> str:
    """CSV dump (header + one row per coefficient, exact decimal integers)."""
    if isinstance(tables, CoefficientTable):
        tables = [tables]
    lines = [CSV_HEADER]
    for table in tables:
        for n, c in enumerate(table.coeffs, start=1):
            lines.append(f"{table.family.value},{table.degree},{n},{c}")
    return "\n".join(lines) + "\n"
