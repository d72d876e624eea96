"""Numerical checks of the auxiliary inequalities behind the eigenvalue bounds.

* ``polynomial_gap``: n t^(n+2l) - (n+2l) t^n s^(2l) + 2l s^(n+2l) minus
  (2l s^(n+2l-2) + 4l t s^(n+2l-3)) (s-t)^2, which should be >= 0.
* ``delta_shift``: for 0 <= beta <= 1 with unit mass, the unit interval
  [delta, delta+1] carrying the same t^n moment carries no more t^(n+2l) moment.
* ``profile_moment_check``: four-term lower bound on int t^(n+2l-1) psi for
  decreasing profiles with psi' >= -D.
* ``fourier_density_box``: height, mass and slope caps of
  F(xi) = sum_j |u_j^(xi)|^2 for Dirichlet box modes.
* ``ramp_comparison_check``: among decreasing F <= M with -F' <= L and a
  fixed r^b moment, the plateau-ramp profile minimizes every higher moment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy import integrate
from scipy.optimize import brentq

from .geometry import Domain, rearrangement_constants, summarize

__all__ = [
    "LemmaReport",
    "polynomial_gap",
    "polynomial_sweep",
    "BetaProfile",
    "DeltaResult",
    "delta_shift",
    "delta_suite",
    "PiecewiseLinear",
    "AdmissibleProfile",
    "profile_moment_rhs",
    "profile_moment_check",
    "profile_sweep",
    "random_profile",
    "FourierDensity",
    "fourier_density_box",
    "radial_rearrangement",
    "ramp_profile",
    "ramp_comparison_check",
    "ramp_sweep",
    "RejectedInput",
]


class RejectedInput(ValueError):
    """Input violates the hypotheses a check needs."""


@dataclass
class LemmaReport:
    lemma: str
    samples: int
    worst_gap: float
    worst_case_inputs: dict = field(default_factory=dict)
    tolerance: float = 1e-9

    @property
    def passed(self) -> bool:
        return self.worst_gap >= -self.tolerance

    def to_record(self) -> dict:
        return {
            "lemma": self.lemma,
            "samples": self.samples,
            "worst_gap": self.worst_gap,
            "worst_case_inputs": _plain(self.worst_case_inputs),
            "pass": self.passed,
        }


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    return obj


# --- polynomial inequality ----------------------------------------------------


def polynomial_gap(n, l, s, t):
    """LHS - RHS of the two-variable polynomial inequality (vectorized)."""
    n = np.asarray(n, dtype=float)
    l = np.asarray(l, dtype=float)
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    lhs = n * t ** (n + 2 * l) - (n + 2 * l) * t**n * s ** (2 * l) + 2 * l * s ** (n + 2 * l)
    rhs = (2 * l * s ** (n + 2 * l - 2) + 4 * l * t * s ** (n + 2 * l - 3)) * (s - t) ** 2
    return lhs - rhs


def polynomial_sweep(samples: int = 10_000, seed: int = 42) -> LemmaReport:
    """Random (n, l, s, t) with n in 2..10, l in 1..4, s, t in (0, 10]."""
    rng = np.random.default_rng(seed)
    n = rng.integers(2, 11, samples)
    l = rng.integers(1, 5, samples)
    s = 10.0 * (1.0 - rng.random(samples))
    t = 10.0 * (1.0 - rng.random(samples))
    gap = polynomial_gap(n, l, s, t) / np.maximum(s, t) ** (n + 2 * l)
    i = int(np.argmin(gap))
    return LemmaReport(
        "polynomial",
        samples,
        float(gap[i]),
        {"n": n[i], "l": l[i], "s": s[i], "t": t[i], "seed": seed},
    )


# --- unit-interval shift ------------------------------------------------------


@dataclass(frozen=True)
class BetaProfile:
    """A weight 0 <= beta <= 1 on [0, upper) with kinks at ``breakpoints``."""

    func: Callable[[np.ndarray], np.ndarray]
    breakpoints: tuple[float, ...] = ()
    upper: float = math.inf
    name: str = "beta"

    @classmethod
    def indicator(cls, a: float, b: float) -> "BetaProfile":
        return cls(lambda t: ((t >= a) & (t <= b)).astype(float), (a, b), b, f"indicator[{a:g},{b:g}]")

    @classmethod
    def exponential(cls, rate: float = 1.0) -> "BetaProfile":
        if rate > 1:
            raise RejectedInput("rate > 1 puts beta above 1 near t = 0")
        return cls(lambda t: rate * np.exp(-rate * t), (), math.inf, f"exp(-{rate:g}t)")

    def moment(self, p: float) -> float:
        f = lambda t: t**p * float(self.func(np.array([t]))[0])  # noqa: E731
        pts = sorted(x for x in self.breakpoints if 0 < x < self.upper)
        edges = [0.0] + pts
        last = edges[-1]
        total = 0.0
        for a, b in zip(edges[:-1], edges[1:]):
            total += integrate.quad(f, a, b, epsabs=1e-13, epsrel=1e-12, limit=200)[0]
        if math.isinf(self.upper):
            total += integrate.quad(f, last, math.inf, epsabs=1e-13, epsrel=1e-12, limit=400)[0]
        elif self.upper > last:
            total += integrate.quad(f, last, self.upper, epsabs=1e-13, epsrel=1e-12, limit=200)[0]
        return total

    def validate(self):
        top = self.upper if math.isfinite(self.upper) else 60.0
        probe = np.concatenate([np.linspace(0.0, top, 4001), np.asarray(self.breakpoints, dtype=float)])
        vals = self.func(probe)
        if np.any(vals < -1e-15) or np.any(vals > 1 + 1e-15):
            raise RejectedInput(f"{self.name}: values must lie in [0, 1]")
        mass = self.moment(0.0)
        if abs(mass - 1.0) > 1e-9:
            raise RejectedInput(f"{self.name}: total mass {mass!r} differs from 1")


@dataclass(frozen=True)
class DeltaResult:
    delta: float
    target: float
    interval_moment_residual: float
    slack: float
    profile: str

    @property
    def passed(self) -> bool:
        return self.slack >= -1e-9 * max(1.0, abs(self.target))


def _interval_moment(delta, p):
    # int_delta^{delta+1} t^p dt
    return ((delta + 1) ** (p + 1) - delta ** (p + 1)) / (p + 1)


def delta_shift(beta: BetaProfile, n: int, l: int) -> DeltaResult:
    """Find delta with matching t^n moment and report the t^(n+2l) slack."""
    beta.validate()
    low = beta.moment(n)
    high = beta.moment(n + 2 * l)
    if _interval_moment(0.0, n) >= low:
        # the moment can only undercut 1/(n+1) by rounding
        delta = 0.0
    else:
        hi = low ** (1.0 / n) + 1.0
        delta = brentq(lambda d: _interval_moment(d, n) - low, 0.0, hi, xtol=1e-15, rtol=1e-15, maxiter=500)
    residual = _interval_moment(delta, n) - low
    slack = high - _interval_moment(delta, n + 2 * l)
    return DeltaResult(delta, low, residual, slack, beta.name)


def delta_suite(n: int = 2, l: int = 1) -> list[LemmaReport]:
    profiles = [BetaProfile.indicator(0.0, 1.0), BetaProfile.indicator(2.5, 3.5), BetaProfile.exponential(1.0)]
    reports = []
    for beta in profiles:
        res = delta_shift(beta, n, l)
        scale = max(1.0, res.target)
        reports.append(
            LemmaReport(
                "delta",
                1,
                res.slack / scale,
                {"profile": res.profile, "n": n, "l": l, "delta": res.delta, "residual": res.interval_moment_residual},
            )
        )
    return reports


# --- piecewise-linear profiles -----------------------------------------------


def _power_diff(a, b, p):
    """b^p - a^p without cancellation for 0 <= a < b."""
    if a == 0.0:
        return b**p
    return a**p * math.expm1(p * math.log1p((b - a) / a))


@dataclass(frozen=True)
class PiecewiseLinear:
    """Continuous piecewise-linear function, zero beyond the last breakpoint."""

    t: tuple[float, ...]
    v: tuple[float, ...]

    def __post_init__(self):
        if len(self.t) != len(self.v) or len(self.t) < 2:
            raise RejectedInput("need matching breakpoints and values (at least 2)")
        if self.t[0] != 0.0:
            raise RejectedInput("profile must start at t = 0")
        if any(b <= a for a, b in zip(self.t[:-1], self.t[1:])):
            raise RejectedInput("breakpoints must increase strictly")
        if not math.isfinite(self.t[-1]):
            raise RejectedInput("profile must have finite support")
        if self.v[-1] != 0.0:
            raise RejectedInput("profile must reach 0 at its last breakpoint")

    def __call__(self, r):
        return np.interp(r, self.t, self.v, right=0.0)

    @property
    def slopes(self) -> np.ndarray:
        return np.diff(self.v) / np.diff(self.t)

    def moment(self, p: float) -> float:
        """int_0^inf t^p f(t) dt, integrated exactly piece by piece."""
        parts = []
        for a, b, va, vb in zip(self.t[:-1], self.t[1:], self.v[:-1], self.v[1:]):
            beta = (vb - va) / (b - a)
            x1 = _power_diff(a, b, p + 1) / (p + 1)
            x2 = _power_diff(a, b, p + 2) / (p + 2)
            # int t^p (va + beta (t - a)) dt
            parts.append(va * x1 + beta * (x2 - a * x1))
        return math.fsum(parts)


@dataclass(frozen=True)
class AdmissibleProfile:
    """Decreasing profile psi with 0 <= -psi' <= slope_cap, in dimension n."""

    shape: PiecewiseLinear
    slope_cap: float
    n: int

    def __post_init__(self):
        sl = self.shape.slopes
        tol = 1e-12 * self.slope_cap
        if np.any(sl > tol) or np.any(sl < -self.slope_cap - tol):
            raise RejectedInput("profile must be decreasing with slope >= -slope_cap")
        if min(self.shape.v) < 0:
            raise RejectedInput("profile must be nonnegative")
        if self.shape.v[0] <= 0:
            raise RejectedInput("profile must start positive")

    @property
    def height(self) -> float:
        return self.shape.v[0]

    @property
    def mass(self) -> float:
        """A = int t^(n-1) psi dt."""
        return self.shape.moment(self.n - 1)


def profile_moment_rhs(n, l, mass, height, slope_cap, eps=1.0) -> tuple[float, ...]:
    """The four terms of the lower bound for int t^(n+2l-1) psi."""
    x = n * mass
    d = n + 2 * l
    return (
        x ** (1 + 2 * l / n) * height ** (-2 * l / n) / d,
        2 * l * eps / (n * d) * x ** (1 + (2 * l - 1) / n) * height ** (1 - (2 * l - 1) / n) / slope_cap,
        -5 * l / (2 * n * d) * x ** (1 + (2 * l - 2) / n) * height ** (2 - (2 * l - 2) / n) / slope_cap**2,
        eps * l / (n * d) * x ** (1 + (2 * l - 3) / n) * height ** (3 - (2 * l - 3) / n) / slope_cap**3,
    )


def profile_moment_check(profile: AdmissibleProfile, l: int, eps: float = 1.0) -> LemmaReport:
    if not (0 < eps <= 1):
        raise RejectedInput("eps must lie in (0, 1]")
    n = profile.n
    lhs = profile.shape.moment(n + 2 * l - 1)
    rhs = math.fsum(profile_moment_rhs(n, l, profile.mass, profile.height, profile.slope_cap, eps))
    return LemmaReport(
        "profile-moment",
        1,
        (lhs - rhs) / lhs,
        {"n": n, "l": l, "eps": eps, "lhs": lhs, "rhs": rhs, "height": profile.height, "slope_cap": profile.slope_cap},
    )


def random_profile(rng: np.random.Generator, n: int, max_pieces: int = 63) -> AdmissibleProfile:
    """Random admissible piecewise-linear profile (at most 64 breakpoints).

    Pieces are either flat (probability 1/4) or descend with slope
    drawn uniformly in [0.02, 1] times the cap; heights and caps are
    log-uniform in [0.1, 10].
    """
    height = math.exp(rng.uniform(math.log(0.1), math.log(10.0)))
    cap = math.exp(rng.uniform(math.log(0.1), math.log(10.0)))
    pieces = int(rng.integers(1, max_pieces + 1))
    kinds = rng.random(pieces) < 0.25
    descending = int((~kinds).sum())
    if descending == 0:
        kinds[-1] = False
        descending = 1
    drops = rng.dirichlet(np.ones(descending)) * height
    t, v = [0.0], [height]
    it = iter(drops)
    for flat in kinds:
        if flat:
            width = rng.uniform(0.0, 5.0) * height / cap
            if width <= 0:
                continue
            t.append(t[-1] + width)
            v.append(v[-1])
        else:
            drop = next(it)
            slope = cap * rng.uniform(0.02, 1.0)
            t.append(t[-1] + drop / slope)
            v.append(max(v[-1] - drop, 0.0))
    v[-1] = 0.0
    return AdmissibleProfile(PiecewiseLinear(tuple(t), tuple(v)), cap, n)


def profile_sweep(samples: int = 1000, seed: int = 42, eps: float = 1.0) -> LemmaReport:
    """Random profiles with n in 2..6 and l in 1..3."""
    rng = np.random.default_rng(seed)
    worst = None
    for i in range(samples):
        n = int(rng.integers(2, 7))
        l = int(rng.integers(1, 4))
        prof = random_profile(rng, n)
        rep = profile_moment_check(prof, l, eps)
        if worst is None or rep.worst_gap < worst.worst_gap:
            worst = rep
            worst.worst_case_inputs.update({"sample": i, "pieces": len(prof.shape.t) - 1})
    return LemmaReport("profile-moment", samples, worst.worst_gap, {**worst.worst_case_inputs, "seed": seed})


# --- plateau-ramp comparison --------------------------------------------------


def ramp_shape(height: float, slope: float, s: float) -> PiecewiseLinear:
    if s <= 0:
        return PiecewiseLinear((0.0, height / slope), (height, 0.0))
    return PiecewiseLinear((0.0, s, s + height / slope), (height, height, 0.0))


def ramp_profile(height: float, slope: float, s: float, r):
    """Plateau of the given height on [0, s], then linear descent to 0."""
    r = np.asarray(r, dtype=float)
    return np.clip(height - slope * (r - s), 0.0, height)


def _ramp_moment(height, slope, s, p):
    return ramp_shape(height, slope, s).moment(p)


def match_plateau(height: float, slope: float, b: float, target: float) -> float:
    """Plateau length s >= 0 whose ramp profile has r^b moment ``target``."""
    g = lambda s: _ramp_moment(height, slope, s, b) - target  # noqa: E731
    g0 = g(0.0)
    if g0 > 1e-13 * abs(target):
        raise RejectedInput("moment below that of the pure ramp; no plateau length matches")
    if g0 >= 0:
        return 0.0
    hi = max(1.0, height / slope)
    while g(hi) < 0:
        hi *= 2.0
        if hi > 1e12:
            raise RejectedInput("moment-matching plateau not bracketed")
    return brentq(g, 0.0, hi, xtol=1e-15, rtol=1e-15, maxiter=500)


def ramp_comparison_check(profile: PiecewiseLinear, height: float, slope: float, b: float, d: float) -> LemmaReport:
    if d < b:
        raise RejectedInput("need d >= b")
    sl = profile.slopes
    if max(profile.v) > height * (1 + 1e-12) or np.any(sl > 1e-12 * slope) or np.any(sl < -slope * (1 + 1e-12)):
        raise RejectedInput("profile must be decreasing, capped by height and slope")
    target = profile.moment(b)
    s = match_plateau(height, slope, b, target)
    lhs = profile.moment(d)
    rhs = _ramp_moment(height, slope, s, d)
    return LemmaReport(
        "ramp-comparison",
        1,
        (lhs - rhs) / rhs,
        {"b": b, "d": d, "plateau": s, "lhs": lhs, "rhs": rhs, "height": height, "slope": slope},
    )


def _random_capped(rng, height, slope, max_pieces=63):
    start = height * rng.uniform(0.5, 1.0)
    pieces = int(rng.integers(1, max_pieces + 1))
    t, v = [0.0], [start]
    drops = rng.dirichlet(np.ones(pieces)) * start
    for drop in drops:
        if rng.random() < 0.25:
            t.append(t[-1] + rng.uniform(0.0, 5.0) * height / slope)
            v.append(v[-1])
        t.append(t[-1] + drop / (slope * rng.uniform(0.02, 1.0)))
        v.append(max(v[-1] - drop, 0.0))
    v[-1] = 0.0
    return PiecewiseLinear(tuple(t), tuple(v))


def ramp_sweep(samples: int = 500, seed: int = 42) -> list[LemmaReport]:
    """Equality case followed by random capped profiles (b = n-1, d = n-1+2lq)."""
    rng = np.random.default_rng(seed)
    # exact extremal profile: the gap must vanish
    eq = ramp_comparison_check(ramp_shape(1.0, 2.0, 1.5), 1.0, 2.0, 1.0, 3.0)
    eq.lemma = "ramp-comparison-equality"
    eq.tolerance = 1e-12
    worst = None
    accepted = 0
    drawn = 0
    while accepted < samples:
        drawn += 1
        n = int(rng.integers(2, 7))
        l = int(rng.integers(1, 4))
        q = float(1.0 - rng.random())
        height = math.exp(rng.uniform(math.log(0.1), math.log(10.0)))
        slope = math.exp(rng.uniform(math.log(0.1), math.log(10.0)))
        prof = _random_capped(rng, height, slope)
        try:
            rep = ramp_comparison_check(prof, height, slope, n - 1, n - 1 + 2 * l * q)
        except RejectedInput:
            continue
        accepted += 1
        if worst is None or rep.worst_gap < worst.worst_gap:
            worst = rep
            worst.worst_case_inputs.update({"n": n, "l": l, "q": q, "sample": accepted - 1})
    sweep = LemmaReport("ramp-comparison", samples, worst.worst_gap, {**worst.worst_case_inputs, "seed": seed, "drawn": drawn})
    return [eq, sweep]


# --- Fourier density of box modes ---------------------------------------------


def box_modes(lengths: Sequence[float], k: int) -> list[tuple[int, ...]]:
    """Multi-indices of the first k Dirichlet modes, ties broken lexicographically."""
    lengths = [float(a) for a in lengths]
    top = k + 1
    cands = []
    for idx in np.ndindex(*([top] * len(lengths))):
        m = tuple(i + 1 for i in idx)
        lam = sum((mi * math.pi / a) ** 2 for mi, a in zip(m, lengths))
        cands.append((lam, m))
    cands.sort()
    return [m for _, m in cands[:k]]


def _segment_transform(m: int, a: float, xi: np.ndarray):
    """1-D transform of sqrt(2/a) sin(m pi (x + a/2)/a) on [-a/2, a/2] and its xi-derivative."""
    kk = m * math.pi / a

    def e(w):
        # int_{-a/2}^{a/2} e^{iwx} dx
        return a * np.sinc(w * a / (2 * math.pi))

    def de(w):
        # derivative of e; series near 0 avoids 0/0
        small = np.abs(w * a) < 1e-3
        safe = np.where(small, 1.0, w)
        exact = (a * safe * np.cos(safe * a / 2) - 2 * np.sin(safe * a / 2)) / safe**2
        series = -w * a**3 / 12 + w**3 * a**5 / 480
        return np.where(small, series, exact)

    phase = np.exp(1j * kk * a / 2)
    norm = math.sqrt(2.0 / a) / math.sqrt(2 * math.pi)
    f = norm * (phase * e(xi + kk) - np.conj(phase) * e(xi - kk)) / 2j
    df = norm * (phase * de(xi + kk) - np.conj(phase) * de(xi - kk)) / 2j
    return f, df


@dataclass
class FourierDensity:
    xi: np.ndarray
    values: np.ndarray
    grad_norm: np.ndarray
    grad_sum: np.ndarray
    k: int
    lengths: tuple[float, ...]
    modes: list
    height_cap: float
    slope_cap: float
    gradient_cap: float

    @property
    def cell_area(self) -> float:
        h = self.xi[1] - self.xi[0]
        return h * h

    def captured_mass(self, radius: float | None = None) -> float:
        """Midpoint quadrature of F over the ball of given radius (default: largest inscribed)."""
        radius = self.xi[-1] if radius is None else radius
        x, y = np.meshgrid(self.xi, self.xi, indexing="ij")
        inside = x * x + y * y <= radius * radius
        return math.fsum(self.values[inside]) * self.cell_area


def plancherel_mass(m: int, a: float, half_width: float = 400.0, step: float = 0.005) -> float:
    """int |f_m|^2 over [-half_width, half_width]; 1 up to an O(half_width^-3) tail."""
    xi = np.arange(-half_width, half_width + step / 2, step)
    f, _ = _segment_transform(m, a, xi)
    return float(integrate.trapezoid(np.abs(f) ** 2, xi))


def fourier_density_box(
    k: int,
    lengths: Sequence[float] = (1.0, 1.0),
    half_width: float = 40.0,
    step: float = 0.05,
) -> tuple[FourierDensity, list[LemmaReport]]:
    """Evaluate F on a square frequency grid and check its height, mass and slope caps.

    Modes are taken on the box centred at its centroid, so the gradient cap
    I(Omega)/(2 pi)^n applies directly.
    """
    if k > 50:
        raise RejectedInput("k > 50 exceeds the truncation budget")
    if len(lengths) != 2:
        raise RejectedInput("the frequency grid is two-dimensional")
    lengths = tuple(float(a) for a in lengths)
    consts = rearrangement_constants(summarize(Domain.box(lengths)))
    inertia = summarize(Domain.box(lengths)).inertia
    xi = np.arange(-half_width, half_width + step / 2, step)
    modes = box_modes(lengths, k)
    cache = {}
    for m in modes:
        for axis in range(2):
            key = (axis, m[axis])
            if key not in cache:
                cache[key] = _segment_transform(m[axis], lengths[axis], xi)
    F = np.zeros((xi.size, xi.size))
    gx = np.zeros_like(F)
    gy = np.zeros_like(F)
    gsum = np.zeros_like(F)
    for m1, m2 in modes:
        f1, d1 = cache[(0, m1)]
        f2, d2 = cache[(1, m2)]
        a1, a2 = np.abs(f1) ** 2, np.abs(f2) ** 2
        F += np.outer(a1, a2)
        gx += np.outer(2 * np.real(np.conj(f1) * d1), a2)
        gy += np.outer(a1, 2 * np.real(np.conj(f2) * d2))
        gsum += np.outer(np.abs(d1) ** 2, a2) + np.outer(a1, np.abs(d2) ** 2)
    grad = np.hypot(gx, gy)
    gcap = inertia / (2 * math.pi) ** 2
    dens = FourierDensity(xi, F, grad, gsum, k, lengths, modes, consts.m, consts.lcap, gcap)

    def worst(ratio_gap, name, scale):
        i = np.unravel_index(np.argmin(ratio_gap), ratio_gap.shape)
        return LemmaReport(
            name,
            ratio_gap.size,
            float(ratio_gap[i]),
            {"xi": (float(xi[i[0]]), float(xi[i[1]])), "cap": scale, "k": k, "lengths": lengths},
        )

    reports = [
        worst((consts.m - F) / consts.m, "fourier-height", consts.m),
        worst((consts.lcap - grad) / consts.lcap, "fourier-slope", consts.lcap),
        worst((gcap - gsum) / gcap, "fourier-gradient-sum", gcap),
    ]
    mass = dens.captured_mass()
    # band [0.95 k, k + 1e-6], expressed as a gap that is >= 0 inside it
    mass_gap = min(mass - 0.95 * k, k + 1e-6 - mass) / k
    reports.append(LemmaReport("fourier-mass", 1, mass_gap, {"captured": mass, "k": k, "radius": half_width}))
    plancherel = [abs(plancherel_mass(m, a) - 1.0) for m in {mm for mode in modes for mm in mode} for a in set(lengths)]
    reports.append(LemmaReport("fourier-plancherel", len(plancherel), 1e-3 - max(plancherel), {"tolerance": 1e-3}))
    return dens, reports


def radial_rearrangement(values: np.ndarray, cell_area: float, n: int = 2) -> tuple[np.ndarray, np.ndarray]:
    """Decreasing radial profile equimeasurable with grid ``values``.

    Each grid cell contributes ``cell_area`` of measure; the j-th largest
    value is placed at the radius enclosing the measure of the cells ranked
    above it plus half its own.
    """
    from .special import unit_ball_volume

    phi = np.sort(np.ravel(values))[::-1]
    enclosed = (np.arange(phi.size) + 0.5) * cell_area
    radii = (enclosed / unit_ball_volume(n)) ** (1.0 / n)
    return radii, phi
