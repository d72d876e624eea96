"""Gamma values at integer/half-integer points and Bessel functions J_m, I_m.

J_m uses its power series for x <= 12 and Miller's backward recurrence
(normalized by J_0 + 2*sum J_2k = 1) above that. I_m is always summed from
its power series, which has no cancellation.
"""

from __future__ import annotations

import math

import numpy as np

SERIES_SWITCH = 12.0


def gamma_half_integer(x: float) -> float:
    """Gamma(x) for x a positive integer or half-integer.

    Integers go through the factorial, half-integers through
    Gamma(m + 1/2) = (2m)! / (4^m m!) * sqrt(pi).
    """
    twice = 2.0 * x
    m2 = int(round(twice))
    if m2 <= 0 or abs(twice - m2) > 1e-12:
        raise ValueError(f"gamma_half_integer needs a positive (half-)integer, got {x!r}")
    if m2 % 2 == 0:
        return float(math.factorial(m2 // 2 - 1))
    m = (m2 - 1) // 2
    # ratio of exact integers first, then one rounding
    return math.factorial(2 * m) / (4**m * math.factorial(m)) * math.sqrt(math.pi)


def unit_ball_volume(n: int) -> float:
    """Volume of the unit ball in R^n, pi^(n/2) / Gamma(1 + n/2)."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"dimension must be a positive integer, got {n!r}")
    return math.pi ** (n / 2) / gamma_half_integer(1 + n / 2)


def _j_series(m: int, x: np.ndarray) -> np.ndarray:
    half = x / 2.0
    term = half**m / math.factorial(m)
    total = term.copy()
    q = -half * half
    for j in range(1, 60):
        term = term * q / (j * (j + m))
        total += term
        if np.all(np.abs(term) <= 1e-17 * np.maximum(np.abs(total), 1e-300)):
            break
    return total


def _j_miller(m: int, x: np.ndarray) -> np.ndarray:
    top = max(m, int(x.max())) + 20 + int(math.sqrt(40.0 * max(m, x.max())))
    top += top % 2
    j_next = np.zeros_like(x)
    j_cur = np.full_like(x, 1e-30)
    norm = np.zeros_like(x)
    out = np.zeros_like(x)
    for order in range(top, 0, -1):
        j_prev = (2.0 * order / x) * j_cur - j_next
        j_next, j_cur = j_cur, j_prev
        # keep the recurrence inside floating range
        big = np.abs(j_cur) > 1e250
        if np.any(big):
            scale = np.where(big, 1e-250, 1.0)
            j_cur, j_next, norm, out = j_cur * scale, j_next * scale, norm * scale, out * scale
        if order - 1 == m:
            out = j_cur.copy()
        if (order - 1) % 2 == 0 and order - 1 > 0:
            norm += 2.0 * j_cur
    norm += j_cur
    if m == 0:
        out = j_cur
    return out / norm


def bessel_j(m: int, x):
    """Bessel function of the first kind J_m(x), integer m >= 0, real x >= 0."""
    if m < 0:
        raise ValueError("order must be nonnegative")
    arr = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(arr < 0):
        raise ValueError("bessel_j is implemented for x >= 0 only")
    out = np.empty_like(arr)
    low = arr <= SERIES_SWITCH
    if np.any(low):
        out[low] = _j_series(m, arr[low])
    if np.any(~low):
        out[~low] = _j_miller(m, arr[~low])
    return out if np.ndim(x) else float(out[0])


def bessel_i(m: int, x):
    """Modified Bessel function I_m(x) by its power series."""
    if m < 0:
        raise ValueError("order must be nonnegative")
    arr = np.atleast_1d(np.asarray(x, dtype=float))
    half = arr / 2.0
    term = half**m / math.factorial(m)
    total = term.copy()
    q = half * half
    j = 0
    while True:
        j += 1
        term = term * q / (j * (j + m))
        total += term
        if np.all(term <= 1e-17 * total) or j > 500:
            break
    return total if np.ndim(x) else float(total[0])


def bessel_i_ratio(m: int, x):
    """I_{m+1}(x) / I_m(x), which stays in [0, 1) for x >= 0."""
    arr = np.atleast_1d(np.asarray(x, dtype=float))
    num = bessel_i(m + 1, arr)
    den = bessel_i(m, arr)
    out = num / den
    return out if np.ndim(x) else float(out[0])
