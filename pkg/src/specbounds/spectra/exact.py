"""Closed-form reference spectra.

* box Laplacian: pi^2 sum (m_i / L_i)^2 over positive multi-indices
* disk Laplacian: j_{m,p}^2 / R^2, doubled for m >= 1
* clamped disk plate: (x/R)^4 with J_m(x) I_{m+1}(x) + I_m(x) J_{m+1}(x) = 0
"""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import brentq

from ..geometry import Domain
from ..special import bessel_i_ratio, bessel_j, gamma_half_integer
from .core import Spectrum

SCAN_STEP = 0.2


class RootFindingError(RuntimeError):
    pass


def _lattice_values(lengths, cutoff):
    axes = []
    for a in lengths:
        mmax = int(math.floor(a * math.sqrt(cutoff) / math.pi))
        if mmax < 1:
            return np.empty(0)
        axes.append((np.arange(1, mmax + 1) * math.pi / a) ** 2)
    total = axes[0]
    for ax in axes[1:]:
        total = (total[:, None] + ax[None, :]).ravel()
        total = total[total <= cutoff]
    return np.sort(total[total <= cutoff])


def box_laplacian_values(lengths, k: int, *, cutoff: float | None = None) -> np.ndarray:
    """First k Dirichlet eigenvalues of the box with the given edge lengths."""
    lengths = [float(a) for a in lengths]
    n = len(lengths)
    vol = math.prod(lengths)
    if cutoff is None:
        # Weyl-sized first guess
        c_n = 4 * math.pi * gamma_half_integer(1 + n / 2) ** (2 / n)
        cutoff = c_n * (k / vol) ** (2 / n) + sum((math.pi / a) ** 2 for a in lengths)
    while True:
        vals = _lattice_values(lengths, cutoff)
        if vals.size >= k:
            return vals[:k]
        cutoff *= 1.5


def box_laplacian_exact(lengths, k: int) -> Spectrum:
    lengths = tuple(float(a) for a in lengths)
    return Spectrum("polyharmonic", 1, Domain.box(lengths), "exact-lattice", box_laplacian_values(lengths, k))


def _bracketed_roots(func, lo, hi, step=SCAN_STEP):
    grid = np.arange(lo, hi + step, step)
    vals = func(grid)
    roots = []
    for i in np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]:
        a, b = grid[i], grid[i + 1]
        try:
            r = brentq(lambda x: float(func(np.array([x]))[0]), a, b, xtol=1e-15, maxiter=200)
        except (RuntimeError, ValueError) as exc:
            raise RootFindingError(f"root refinement failed on [{a}, {b}]: {exc}") from exc
        if r <= hi:
            roots.append(r)
    for i in np.nonzero(vals == 0)[0]:
        if 0 < i < len(grid) - 1 and grid[i] <= hi:
            roots.append(grid[i])
    return sorted(roots)


def bessel_zeros(m: int, upto: float) -> list[float]:
    """Positive zeros of J_m not exceeding ``upto``."""
    if upto <= m:
        return []
    return _bracketed_roots(lambda x: bessel_j(m, x), max(m, SCAN_STEP), upto)


def clamped_frequency(m: int, x):
    """J_m(x) I_{m+1}(x)/I_m(x) + J_{m+1}(x); same roots as the frequency equation."""
    x = np.asarray(x, dtype=float)
    return bessel_j(m, x) * bessel_i_ratio(m, x) + bessel_j(m + 1, x)


def clamped_roots(m: int, upto: float) -> list[float]:
    if upto <= m:
        return []
    return _bracketed_roots(lambda x: clamped_frequency(m, x), max(m, SCAN_STEP), upto)


def _disk_values(root_fn, power, k, radius):
    # every root of order m exceeds m, so orders above the cutoff contribute nothing
    upto = max(4.0, 2.0 * math.sqrt(k))
    while True:
        vals = []
        for m in range(0, int(math.ceil(upto)) + 1):
            roots = root_fn(m, upto)
            if not roots:
                if m > upto:
                    break
                continue
            mult = 1 if m == 0 else 2
            for x in roots:
                vals.extend([x**power] * mult)
        if len(vals) >= k:
            return np.sort(np.array(vals))[:k] / radius**power
        upto *= 1.4


def disk_laplacian_exact(radius: float, k: int) -> Spectrum:
    """First k Dirichlet Laplacian eigenvalues of the disk of given radius."""
    vals = _disk_values(bessel_zeros, 2, k, radius)
    return Spectrum("polyharmonic", 1, Domain.ball(radius, 2), "exact-bessel", vals)


def disk_clamped_plate_exact(radius: float, k: int) -> Spectrum:
    """First k clamped-plate (l = 2) eigenvalues of the disk."""
    vals = _disk_values(clamped_roots, 4, k, radius)
    return Spectrum("polyharmonic", 2, Domain.ball(radius, 2), "exact-bessel", vals)


def exact_spectrum(domain: Domain, l: int, k: int) -> Spectrum:
    """Dispatch to the closed form available for (domain, l)."""
    if domain.kind == "box" and l == 1:
        return box_laplacian_exact(domain.params, k)
    if domain.kind == "ball" and domain.dimension == 2:
        (radius,) = domain.params
        if l == 1:
            return disk_laplacian_exact(radius, k)
        if l == 2:
            return disk_clamped_plate_exact(radius, k)
    raise ValueError(f"no closed-form spectrum for {domain.label} with l={l}")
