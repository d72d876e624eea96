"""Spectrum containers, compensated sums and CSV export."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..geometry import Domain


def neumaier_cumsum(values) -> np.ndarray:
    """Running sums with Neumaier compensation."""
    out = np.empty(len(values))
    total = 0.0
    comp = 0.0
    for i, x in enumerate(values):
        x = float(x)
        t = total + x
        if abs(total) >= abs(x):
            comp += (total - t) + x
        else:
            comp += (x - t) + total
        total = t
        out[i] = total + comp
    return out


@dataclass(frozen=True)
class SpectrumSums:
    partial_sums: np.ndarray
    eigenvalues: np.ndarray

    def power_sum(self, q: float) -> float:
        """sum_{j<=K} lambda_j^q for this truncation."""
        return math.fsum(self.eigenvalues**q)

    def power_partial_sums(self, q: float) -> np.ndarray:
        return neumaier_cumsum(self.eigenvalues**q)

    def neg_power_sum(self, p: float) -> float:
        return math.fsum(self.eigenvalues ** (-p))

    def neg_power_partial_sums(self, p: float) -> np.ndarray:
        return neumaier_cumsum(self.eigenvalues ** (-p))


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Sorted eigenvalues (multiplicities expanded) of one operator on one domain."""

    operator: str
    order: int
    domain: Domain
    method: str
    eigenvalues: np.ndarray
    grid_step: Optional[float] = None

    def __post_init__(self):
        ev = np.array(self.eigenvalues, dtype=float)
        if ev.ndim != 1 or ev.size == 0:
            raise ValueError("spectrum needs a nonempty 1-d eigenvalue list")
        if np.any(ev <= 0) or np.any(np.diff(ev) < 0):
            raise ValueError("eigenvalues must be positive and nondecreasing")
        ev.setflags(write=False)
        object.__setattr__(self, "eigenvalues", ev)

    def __len__(self):
        return self.eigenvalues.size

    @property
    def method_label(self) -> str:
        if self.grid_step is None:
            return self.method
        return f"{self.method}(h={self.grid_step:g})"

    def sums(self, k: Optional[int] = None) -> SpectrumSums:
        k = len(self) if k is None else k
        if k > len(self):
            raise ValueError(f"spectrum holds {len(self)} eigenvalues, {k} requested")
        ev = self.eigenvalues[:k]
        return SpectrumSums(neumaier_cumsum(ev), ev)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "eigenvalue"])
        for i, lam in enumerate(self.eigenvalues, start=1):
            writer.writerow([i, f"{lam:.17g}"])
        return buf.getvalue()


def sums(spectrum: Spectrum, k: int, q: float | None = None, p: float | None = None):
    """Partial sums up to k, plus the requested power sums.

    Returns ``(SpectrumSums, power)`` where ``power`` is a dict with keys
    ``"q"`` and/or ``"p"`` for the requested exponents.
    """
    s = spectrum.sums(k)
    power = {}
    if q is not None:
        power["q"] = s.power_sum(q)
    if p is not None:
        power["p"] = s.neg_power_sum(p)
    return s, power
