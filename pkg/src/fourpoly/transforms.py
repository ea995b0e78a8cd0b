"""Numerically stable evaluation of the finite Fourier transforms

    int_{-1}^{1} e^{-i lam x} T_m(x) dx   and   int_{-1}^{1} e^{-i lam x} P_m(x) dx

for complex lam, with three regimes:

* lam == 0: exact rational value,
* |lam| >= max(1, m): the explicit closed form over the integer tables,
* otherwise: a Taylor series in lam built from exact polynomial moments.

The closed form is an alternating sum whose largest term grows like
(2m-1)!!/|lam|^(m+1); below |lam| ~ m it cancels catastrophically in doubles,
which is why the series fallback exists.  The ascending-evaluation rule for
spherical Bessel functions motivates the max(1, m) switch.

Also provided is the auxiliary kernel K(m, z) = int_0^pi e^{z cos w} sin(mw) dw
in closed form, which yields a second, independent route to the Chebyshev
transform via integration by parts; the two routes cross-validate each other.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .coeffs import Family, as_family, binom_clamped, coefficient_table

__all__ = [
    "EvalPath",
    "TransformResult",
    "regime_threshold",
    "zero_lambda_value",
    "chebyshev_hat",
    "legendre_hat",
    "transform_hat",
    "small_lambda_series",
    "moment",
    "exp_cos_sine_integral",
    "chebyshev_hat_via_kernel",
]

_SERIES_RTOL = 1e-17
_SERIES_KMAX = 1000


class EvalPath(str, Enum):
    """Which evaluation regime produced a transform value."""

    CLOSED_FORM = "ClosedForm"
    ZERO_LAMBDA = "ZeroLambda"
    SMALL_LAMBDA_SERIES = "SmallLambdaSeries"


@dataclass(frozen=True)
class TransformResult:
    value: complex
    path: EvalPath
    degree: int
    family: Family


def regime_threshold(m: int) -> float:
    """|lam| at or above which the closed form is used for degree m."""
    return float(max(1, m))


def zero_lambda_value(family: Family | str, m: int) -> Fraction:
    """Exact transform value at lam = 0."""
    if m < 0:
        raise ValueError("degree must be non-negative")
    if as_family(family) is Family.LEGENDRE:
        return Fraction(2) if m == 0 else Fraction(0)
    if m == 1:
        return Fraction(0)
    return Fraction((-1) ** (m + 1) - 1, m * m - 1)


# ---------------------------------------------------------------------------
# closed form
# ---------------------------------------------------------------------------

_I_POW = (1.0, 1j, -1.0, -1j)  # i**k for k mod 4

# Trigger for the exact-summation rescue below: once the float estimate of
# sum |term| exceeds this multiple of the result, the alternating sums have
# cancelled too far for plain double accumulation.
_CANCEL_LIMIT = 256.0


def _exact_poly(coeffs, w: complex) -> complex:
    """sum_{n>=1} c_n w^n in exact rational arithmetic, rounded once.

    `coeffs` holds Gaussian integers as (re, im) pairs; w is a float complex
    (hence an exact rational).  Used when the alternating sum cancels so
    heavily that double accumulation would lose most digits; exact Horner
    makes the result correctly rounded for the given w.
    """
    w_re = Fraction(w.real)
    w_im = Fraction(w.imag)
    acc_re = Fraction(0)
    acc_im = Fraction(0)
    for c_re, c_im in reversed(coeffs):
        acc_re, acc_im = (
            acc_re * w_re - acc_im * w_im + c_re,
            acc_re * w_im + acc_im * w_re + c_im,
        )
    acc_re, acc_im = acc_re * w_re - acc_im * w_im, acc_re * w_im + acc_im * w_re
    return complex(float(acc_re), float(acc_im))


def _closed_form_complex(coeffs: tuple[int, ...], m: int, lam: complex) -> complex:
    e_plus = cmath.exp(1j * lam)
    e_minus = cmath.exp(-1j * lam)
    w = 1.0 / (1j * lam)
    power = 1.0 + 0j
    sign = 1 if m % 2 else -1  # (-1)^(n+m) starting at n = 1
    part_plus = 0j  # sum c_n w^n, multiplies e^{i lam}
    part_minus = 0j  # sum (-1)^(n+m) c_n w^n, multiplies e^{-i lam}
    magnitude = 0.0
    for n in range(1, m + 2):
        power *= w
        if n % 16 == 0:
            # repeated multiplication drifts ~n*eps; re-anchor occasionally
            power = w**n
        term = float(coeffs[n - 1]) * power
        part_plus += term
        part_minus += sign * term
        magnitude += abs(term.real) + abs(term.imag)
        sign = -sign
    value = e_plus * part_plus + e_minus * part_minus
    # near the imaginary axis just above the regime threshold the alternating
    # sums cancel by many orders; redo them exactly when that happens
    scale = (abs(e_plus) + abs(e_minus)) * magnitude
    if scale > _CANCEL_LIMIT * abs(value):
        sign = 1 if m % 2 else -1
        plus_coeffs = [(c, 0) for c in coeffs]
        minus_coeffs = []
        for c in coeffs:
            minus_coeffs.append((sign * c, 0))
            sign = -sign
        value = e_plus * _exact_poly(plus_coeffs, w) + e_minus * _exact_poly(minus_coeffs, w)
    return value


def _closed_form_real(coeffs: tuple[int, ...], m: int, x: float) -> complex:
    # For real lam, i^m * transform is real; summing that real number and
    # rotating back by i^(-m) keeps parity/conjugation/realness exact.
    two_cos = 2.0 * math.cos(x)
    two_sin = 2.0 * math.sin(x)
    inv = 1.0 / x
    power = 1.0
    cos_sum = 0.0  # integer polynomial in 1/x multiplying 2cos(x)
    sin_sum = 0.0  # likewise for 2sin(x)
    magnitude = 0.0
    for n in range(1, m + 2):
        power *= inv
        if n % 16 == 0:
            power = inv**n
        k = (m - n) % 4
        term = float(coeffs[n - 1]) * power
        if (m + n) % 2 == 0:
            # bracket is 2cos(x); i^(m-n) is +-1
            cos_sum += term if k == 0 else -term
        else:
            # bracket is 2i sin(x); i^(m-n) is +-i, the product is -+1
            sin_sum += -term if k == 1 else term
        magnitude += abs(term)
    total = two_cos * cos_sum + two_sin * sin_sum
    if 2.0 * magnitude > _CANCEL_LIMIT * abs(total):
        # both parity-class sums are integer polynomials in 1/x; re-sum them
        # exactly (keeps the result exactly real before the final rotation)
        cos_coeffs = []
        sin_coeffs = []
        for n in range(1, m + 2):
            k = (m - n) % 4
            c = coeffs[n - 1]
            if (m + n) % 2 == 0:
                cos_coeffs.append((c if k == 0 else -c, 0))
                sin_coeffs.append((0, 0))
            else:
                cos_coeffs.append((0, 0))
                sin_coeffs.append((-c if k == 1 else c, 0))
        w = complex(inv, 0.0)
        total = two_cos * _exact_poly(cos_coeffs, w).real + two_sin * _exact_poly(sin_coeffs, w).real
    return total * _I_POW[(-m) % 4]


# ---------------------------------------------------------------------------
# small-lam series from exact moments
# ---------------------------------------------------------------------------

# mu_{k,m} = int_{-1}^{1} x^k p_m(x) dx, held as exact Fractions plus a float
# image.  Plain dict writes are idempotent, so concurrent use merely repeats
# work instead of corrupting the cache.
_MOMENTS: dict[tuple[Family, int], tuple[list[Fraction], list[float]]] = {}


def _moment_row_zero(family: Family, jmax: int) -> list[Fraction]:
    if family is Family.LEGENDRE:
        return [Fraction(2) if j == 0 else Fraction(0) for j in range(jmax + 1)]
    return [zero_lambda_value(family, j) for j in range(jmax + 1)]


def _build_moments(family: Family, m: int, kmax: int) -> tuple[list[Fraction], list[float]]:
    # Reduce x^k p_m through the three-term recurrences
    #   x P_j = ((j+1) P_{j+1} + j P_{j-1}) / (2j+1),   x T_j = (T_{j+1} + T_{j-1}) / 2
    # down to k = 0, where every integral is known exactly.
    jmax = m + kmax + 1
    current = _moment_row_zero(family, jmax)
    out = [current[m]]
    legendre = family is Family.LEGENDRE
    for k in range(1, kmax + 1):
        top = jmax - k
        nxt = [Fraction(0)] * (top + 1)
        nxt[0] = current[1]
        for j in range(1, top + 1):
            if legendre:
                nxt[j] = ((j + 1) * current[j + 1] + j * current[j - 1]) / (2 * j + 1)
            elif j == 1:
                nxt[1] = (current[2] + current[0]) / 2
            else:
                nxt[j] = (current[j + 1] + current[j - 1]) / 2
        current = nxt
        out.append(current[m])
    return out, [float(v) for v in out]


def _moments(family: Family, m: int, kmin: int) -> tuple[list[Fraction], list[float]]:
    key = (family, m)
    cached = _MOMENTS.get(key)
    if cached is None or len(cached[0]) <= kmin:
        cached = _build_moments(family, m, max(kmin + 16, m + 64))
        _MOMENTS[key] = cached
    return cached


def moment(family: Family | str, m: int, k: int) -> Fraction:
    """Exact moment int_{-1}^{1} x^k p_m(x) dx for degree m and power k >= 0."""
    if k < 0 or m < 0:
        raise ValueError("moment indices must be non-negative")
    return _moments(as_family(family), m, k)[0][k]


def small_lambda_series(family: Family | str, m: int, lam: complex) -> complex:
    """Taylor evaluation sum_k (-i lam)^k / k! * mu_{k,m}.

    Intended for 0 < |lam| < regime_threshold(m), where the closed form
    cancels; the series itself converges for any lam.  Terms are added until
    one falls below 1e-17 of the partial sum (checked past k = |lam|, after
    which term magnitudes decrease).
    """
    fam = as_family(family)
    lam = complex(lam)
    _, floats = _moments(fam, m, m + 16)
    factor = 1.0 + 0j  # (-i lam)^k / k!
    step = -1j * lam
    alam = abs(lam)
    total = 0j
    k = 0
    while True:
        if k >= len(floats):
            _, floats = _moments(fam, m, 2 * len(floats))
        mu = floats[k]
        if mu != 0.0:
            term = factor * mu
            total += term
            if k >= alam and total != 0 and abs(term) <= _SERIES_RTOL * abs(total):
                return total
        factor *= step / (k + 1)
        if factor == 0:
            # powers underflowed; every remaining term is a true double zero
            return total
        k += 1
        if k > _SERIES_KMAX:
            raise RuntimeError("moment series failed to converge")


# ---------------------------------------------------------------------------
# public transform evaluation
# ---------------------------------------------------------------------------


def transform_hat(family: Family | str, m: int, lam: complex) -> TransformResult:
    """Finite Fourier transform of the degree-m polynomial, regime-selected."""
    fam = as_family(family)
    if m < 0:
        raise ValueError("degree must be non-negative")
    lam = complex(lam)
    if not cmath.isfinite(lam):
        raise ValueError("lam must be finite")
    if lam == 0:
        return TransformResult(complex(float(zero_lambda_value(fam, m))), EvalPath.ZERO_LAMBDA, m, fam)
    if abs(lam) >= regime_threshold(m):
        coeffs = coefficient_table(fam, m).coeffs
        if lam.imag == 0.0:
            value = _closed_form_real(coeffs, m, lam.real)
        else:
            value = _closed_form_complex(coeffs, m, lam)
        return TransformResult(value, EvalPath.CLOSED_FORM, m, fam)
    return TransformResult(small_lambda_series(fam, m, lam), EvalPath.SMALL_LAMBDA_SERIES, m, fam)


def chebyshev_hat(m: int, lam: complex) -> TransformResult:
    """int_{-1}^{1} e^{-i lam x} T_m(x) dx."""
    return transform_hat(Family.CHEBYSHEV, m, lam)


def legendre_hat(m: int, lam: complex) -> TransformResult:
    """int_{-1}^{1} e^{-i lam x} P_m(x) dx."""
    return transform_hat(Family.LEGENDRE, m, lam)


# ---------------------------------------------------------------------------
# auxiliary kernel and the integration-by-parts route
# ---------------------------------------------------------------------------


def exp_cos_sine_integral(m: int, z: complex) -> complex:
    """Closed form of K(m, z) = int_0^pi e^{z cos w} sin(m w) dw, z != 0.

    K(0, z) = 0 and K(1, z) = (e^z - e^{-z})/z; higher degrees add a
    polynomial-in-1/z correction with exact integer weights.
    """
    z = complex(z)
    if z == 0:
        raise ValueError("kernel integral requires z != 0")
    if not cmath.isfinite(z):
        raise ValueError("z must be finite")
    if m < 0:
        raise ValueError("degree must be non-negative")
    e_plus = cmath.exp(z)
    e_minus = cmath.exp(-z)
    sign_m = -1.0 if m % 2 else 1.0
    total = (m / z) * (e_plus + sign_m * e_minus)
    factor = 1.0 / z  # accumulates (1/z) * (2/z)^n
    two_over_z = 2.0 / z
    sign_n = 1.0
    for n in range(1, m):
        factor *= two_over_z
        sign_n = -sign_n
        weight = 0
        for k in range(1, m - n + 1):
            prod = 1
            for j in range(k, n + k):
                prod *= m - j
            weight += binom_clamped(n + k - 1, k - 1) * prod
        total += factor * (sign_n * e_plus + sign_m * e_minus) * float(weight)
    return total


def chebyshev_hat_via_kernel(m: int, lam: complex) -> complex:
    """Chebyshev transform through the kernel route (integration by parts).

    Independent of the coefficient tables; used to cross-check
    `chebyshev_hat` on the closed-form regime.
    """
    lam = complex(lam)
    if lam == 0:
        raise ValueError("kernel route requires lam != 0")
    sign = -1.0 if m % 2 else 1.0
    return (
        cmath.exp(1j * lam) * sign
        - cmath.exp(-1j * lam)
        + m * exp_cos_sine_integral(m, -1j * lam)
    ) / (1j * lam)
