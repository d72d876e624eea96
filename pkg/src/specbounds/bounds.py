"""Lower bounds on eigenvalue sums of (-Delta)^l and of the order-l Stokes operator.

Every bound is a short sum of terms ``coefficient * k**exponent``; the
returned :class:`BoundValue` keeps that decomposition so callers can look at
individual terms, asymptotic coefficients and differences between families.

Notation used below: ``n`` dimension, ``l`` polyharmonic order, ``V`` volume,
``I`` centroidal moment of inertia, ``g = Gamma(1 + n/2)``.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .geometry import GeometrySummary
from .special import gamma_half_integer, unit_ball_volume

__all__ = [
    "Validity",
    "BoundRequest",
    "BoundValue",
    "HypothesisWarning",
    "POLY_FAMILIES",
    "STOKES_FAMILIES",
    "FAMILY_ALIASES",
    "eigen_sum_lower_bound",
    "stokes_sum_lower_bound",
    "power_sum_lower_bound",
    "neg_power_sum_upper_bound",
    "weyl_reference",
    "compare_bounds",
    "bound",
    "four_term_from_profile",
]

FOUR_PI = 4.0 * math.pi


class Validity(str, enum.Enum):
    EXACT = "exact-hypotheses-met"
    ASYMPTOTIC = "asymptotic-leading-form"
    VIOLATED = "hypotheses-violated"


class HypothesisWarning(UserWarning):
    """A bound was evaluated outside the range where it is proven."""


@dataclass(frozen=True)
class BoundRequest:
    geometry: GeometrySummary
    k: int
    l: int = 1
    operator: str = "polyharmonic"
    exponent: float | None = None

    def __post_init__(self):
        if self.operator not in ("polyharmonic", "stokes"):
            raise ValueError(f"operator must be 'polyharmonic' or 'stokes', got {self.operator!r}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.l < 1:
            raise ValueError(f"order l must be >= 1, got {self.l}")
        if self.geometry.dimension < 2:
            raise ValueError("bounds need dimension n >= 2")

    @property
    def n(self) -> int:
        return self.geometry.dimension

    @property
    def order_in_range(self) -> bool:
        """Whether 1 <= l < (n + 1)/2, the range of the four-term bounds."""
        return 1 <= self.l and 2 * self.l < self.n + 1


@dataclass(frozen=True)
class BoundValue:
    value: float
    direction: str
    validity: Validity
    terms: tuple[tuple[float, float], ...]
    family: str = ""
    notes: tuple[str, ...] = field(default=())

    def term_values(self, k: float) -> list[float]:
        return [c * k**e for e, c in self.terms]


def _make(family, direction, validity, terms, k, notes=()):
    terms = tuple((float(e), float(c)) for e, c in terms)
    value = math.fsum(c * k**e for e, c in terms)
    if validity is Validity.VIOLATED:
        warnings.warn(f"{family}: {'; '.join(notes)}", HypothesisWarning, stacklevel=3)
    return BoundValue(value, direction, validity, terms, family, tuple(notes))


# --- polyharmonic sums --------------------------------------------------------


def _weyl_term(n, l, base):
    """(4 pi)^l n/(n+2l) base^(2l/n), the coefficient of k^(1+2l/n)."""
    return (1 + 2 * l / n, FOUR_PI**l * n / (n + 2 * l) * base ** (2 * l / n))


def _levine_protter(req, as_printed):
    n, l, g = req.n, req.l, _g(req)
    return [_weyl_term(n, l, g / req.geometry.volume)], []


def _berezin_li_yau(req, as_printed):
    notes = [] if req.l == 1 else [f"Laplacian bound used with l={req.l}; leading term evaluated at order l"]
    return _levine_protter(req, as_printed)[0], notes


def _melas(req, as_printed):
    n, V, I = req.n, req.geometry.volume, req.geometry.inertia
    terms, notes = _berezin_li_yau(req, as_printed)
    return terms + [(1.0, V / (24.0 * (n + 2) * I))], notes


def _yolcu_yolcu(req, as_printed):
    n, V, I = req.n, req.geometry.volume, req.geometry.inertia
    notes = [] if req.l == 1 else ["Laplacian bound used with l != 1"]
    base = _g(req) / V
    rho = V / I
    second_exp = 0.0 if as_printed else 1 + 1 / n
    terms = [
        _weyl_term(n, 1, base),
        (second_exp, 2 * math.sqrt(math.pi) / (n + 2) * math.sqrt(rho) * base ** (1 / n)),
        (1.0, -5.0 / (8 * (n + 2)) * rho),
        (1 - 1 / n, 1 / (16 * math.sqrt(math.pi) * (n + 2)) * rho**1.5 * base ** (-1 / n)),
    ]
    return terms, notes


def _cswz(req, as_printed):
    n, l, V, I = req.n, req.l, req.geometry.volume, req.geometry.inertia
    base = _g(req) / V
    second_exp = (2 * l - 2) / n if as_printed else 1 + (2 * l - 2) / n
    return [
        _weyl_term(n, l, base),
        (second_exp, FOUR_PI ** (l - 1) * n * l / 48 * base ** ((2 * l - 2) / n) * V / I),
    ], []


def _four_term(req, as_printed):
    n, l, V, I = req.n, req.l, req.geometry.volume, req.geometry.inertia
    g = _g(req)
    d = n + 2 * l
    notes = [] if req.order_in_range else [f"needs 1 <= l < (n+1)/2, got l={l}, n={n}"]
    terms = [
        (1 + 2 * l / n, n * FOUR_PI**l / d * (g / V) ** (2 * l / n)),
        (
            1 + (2 * l - 1) / n,
            FOUR_PI ** ((2 * l - 1) / 2) * l / (d * math.sqrt(I)) * V ** (0.5 - (2 * l - 1) / n) * g ** ((2 * l - 1) / n),
        ),
        (
            1 + (2 * l - 2) / n,
            -5 * FOUR_PI ** (l - 1) * l / (8 * d * I) * g ** (2 * (l - 1) / n) * V ** (1 - (2 * l - 2) / n),
        ),
        (
            1 + (2 * l - 3) / n,
            FOUR_PI ** ((2 * l - 3) / 2) * l / (8 * d * I**1.5) * V ** (1.5 - (2 * l - 3) / n) * g ** ((2 * l - 3) / n),
        ),
    ]
    return terms, notes


_POLY = {
    "levine_protter": (_levine_protter, Validity.EXACT, None),
    "berezin_li_yau": (_berezin_li_yau, Validity.EXACT, 1),
    "melas": (_melas, Validity.EXACT, 1),
    "yolcu_yolcu": (_yolcu_yolcu, Validity.EXACT, 1),
    "cswz_leading": (_cswz, Validity.ASYMPTOTIC, None),
    "four_term": (_four_term, Validity.EXACT, None),
}
POLY_FAMILIES = tuple(_POLY)

# --- Stokes sums ---------------------------------------------------------------


def _stokes_base(req):
    return _g(req) / ((req.n - 1) * req.geometry.volume)


def _ilyin_bly(req, as_printed):
    notes = [] if req.l == 1 else ["classical Stokes bound used with l != 1"]
    return [_weyl_term(req.n, 1, _stokes_base(req))], notes


def _yolcu_yolcu_stokes(req, as_printed):
    n, V, I = req.n, req.geometry.volume, req.geometry.inertia
    notes = [] if req.l == 1 else ["classical Stokes bound used with l != 1"]
    base = _stokes_base(req)
    rho = (n - 1) / n * V / I
    terms = [
        _weyl_term(n, 1, base),
        (1 + 1 / n, 2 * math.sqrt(math.pi) / (n + 2) * math.sqrt(rho) * base ** (1 / n)),
        (1.0, -5.0 * (n - 1) / (8 * n * (n + 2)) * V / I),
        (1 - 1 / n, 1 / (16 * math.sqrt(math.pi) * (n + 2)) * rho**1.5 * base ** (-1 / n)),
    ]
    return terms, notes


def _ilyin_higher(req, as_printed):
    n, l, V, I = req.n, req.l, req.geometry.volume, req.geometry.inertia
    base = _stokes_base(req)
    if as_printed:
        first = (1 + 2 * l / n, FOUR_PI**l * n / (n + 2) * base ** (2 / n))
        second_exp = 1 + (2 - 2 * l) / n
    else:
        first = _weyl_term(n, l, base)
        second_exp = 1 + (2 * l - 2) / n
    second = (second_exp, FOUR_PI ** (l - 1) * l / 48 * (n - 1) * V / I * base ** ((2 * l - 2) / n))
    return [first, second], []


def _four_term_stokes(req, as_printed):
    n, l, V, I = req.n, req.l, req.geometry.volume, req.geometry.inertia
    base = _stokes_base(req)
    rho = (n - 1) * V / (n * I)
    d = n + 2 * l
    notes = [] if req.order_in_range else [f"needs 1 <= l < (n+1)/2, got l={l}, n={n}"]
    terms = [
        (1 + 2 * l / n, n * FOUR_PI**l / d * base ** (2 * l / n)),
        (1 + (2 * l - 1) / n, FOUR_PI ** ((2 * l - 1) / 2) * l / d * base ** ((2 * l - 1) / n) * math.sqrt(rho)),
        (1 + (2 * l - 2) / n, -5 * (n - 1) * FOUR_PI ** (l - 1) * l / (8 * n * d) * base ** ((2 * l - 2) / n) * V / I),
        (1 + (2 * l - 3) / n, FOUR_PI ** ((2 * l - 3) / 2) * l / (8 * d) * base ** ((2 * l - 3) / n) * rho**1.5),
    ]
    return terms, notes


_STOKES = {
    "ilyin_bly": (_ilyin_bly, Validity.EXACT, 1),
    "yolcu_yolcu_stokes": (_yolcu_yolcu_stokes, Validity.EXACT, 1),
    "ilyin_higher_leading": (_ilyin_higher, Validity.ASYMPTOTIC, None),
    "four_term_stokes": (_four_term_stokes, Validity.EXACT, None),
}
STOKES_FAMILIES = tuple(_STOKES)

FAMILY_ALIASES = {
    "lp": "levine_protter",
    "bly": "berezin_li_yau",
    "yy": "yolcu_yolcu",
    "cswz": "cswz_leading",
    "yy_stokes": "yolcu_yolcu_stokes",
    "ilyin": "ilyin_bly",
}


def _g(req):
    return gamma_half_integer(1 + req.n / 2)


def _resolve(family):
    family = FAMILY_ALIASES.get(family, family)
    if family in _POLY:
        return family, "polyharmonic", _POLY[family]
    if family in _STOKES:
        return family, "stokes", _STOKES[family]
    raise ValueError(f"unknown bound family {family!r}")


def _evaluate(table, family, req, as_printed):
    fn, validity, needs_l = table[family]
    terms, notes = fn(req, as_printed)
    if notes:
        validity = Validity.VIOLATED
    elif needs_l is not None and req.l != needs_l:
        validity = Validity.VIOLATED
    if as_printed:
        notes = list(notes) + ["as-printed form"]
    return _make(family, "lower", validity, terms, req.k, notes)


def eigen_sum_lower_bound(family: str, request: BoundRequest, *, as_printed: bool = False) -> BoundValue:
    """Lower bound on lambda_1 + ... + lambda_k for (-Delta)^l with clamped conditions.

    ``family`` is one of :data:`POLY_FAMILIES` (or an alias such as ``bly``).
    ``berezin_li_yau``, ``melas`` and ``yolcu_yolcu`` are Laplacian bounds;
    ``four_term`` needs 1 <= l < (n+1)/2; ``cswz_leading`` drops its
    unspecified infinitesimal and is only an asymptotic reference.
    Requests outside a family's hypotheses are still evaluated and flagged.
    """
    family, kind, _ = _resolve(family)
    if kind != "polyharmonic":
        raise ValueError(f"{family} is a Stokes bound; use stokes_sum_lower_bound")
    return _evaluate(_POLY, family, request, as_printed)


def stokes_sum_lower_bound(family: str, request: BoundRequest, *, as_printed: bool = False) -> BoundValue:
    """Lower bound on mu_1 + ... + mu_k for the order-l Stokes operator."""
    family, kind, _ = _resolve(family)
    if kind != "stokes":
        raise ValueError(f"{family} is a polyharmonic bound; use eigen_sum_lower_bound")
    return _evaluate(_STOKES, family, request, as_printed)


def power_sum_lower_bound(request: BoundRequest, *, two_term: bool = False, as_printed: bool = False) -> BoundValue:
    """Lower bound on sum_j lambda_j^q for 0 < q <= 1 (``request.exponent`` is q).

    The one-term form is a proven bound. The two-term form omits an
    O(k^(1 + (2lq - 4)/n)) remainder and is flagged asymptotic.
    ``as_printed`` swaps in the (4 pi)^(lq/n) prefactor of the printed statement.
    """
    q = request.exponent
    if q is None or not (0 < q <= 1):
        raise ValueError(f"power sums need 0 < q <= 1, got {q!r}")
    n, l, V = request.n, request.l, request.geometry.volume
    base = _g(request) / V
    lq = l * q
    prefactor = FOUR_PI ** (lq / n) if as_printed else FOUR_PI**lq
    terms = [(1 + 2 * lq / n, prefactor * n / (n + 2 * lq) * base ** (2 * lq / n))]
    validity = Validity.EXACT
    notes = ["as-printed form"] if as_printed else []
    if two_term:
        I = request.geometry.inertia
        terms.append((1 + (2 * lq - 2) / n, FOUR_PI ** (lq - 1) * n * lq / 48 * V / I * base ** ((2 * lq - 2) / n)))
        validity = Validity.ASYMPTOTIC
    return _make("power_sum", "lower", validity, terms, request.k, notes)


def neg_power_sum_upper_bound(request: BoundRequest, *, as_printed: bool = False) -> BoundValue:
    """Upper bound on sum_j lambda_j^(-p) for 0 < p < n/(2l) (``request.exponent`` is p).

    Corrected form: n/(n - 2lp) (4 pi)^(-lp) (V/g)^(2lp/n) k^(1 - 2lp/n).
    """
    p = request.exponent
    n, l = request.n, request.l
    if p is None or not (0 < p < n / (2 * l)):
        raise ValueError(f"negative power sums need 0 < p < n/(2l) = {n / (2 * l)}, got {p!r}")
    ratio = request.geometry.volume / _g(request)
    lp = l * p
    if as_printed:
        coeff = FOUR_PI ** (-lp / n) * n / (n - 2 * lp) * ratio ** (lp / n)
        notes = ["as-printed form"]
    else:
        coeff = FOUR_PI ** (-lp) * n / (n - 2 * lp) * ratio ** (2 * lp / n)
        notes = []
    return _make("neg_power_sum", "upper", Validity.EXACT, [(1 - 2 * lp / n, coeff)], request.k, notes)


def weyl_reference(operator: str, n: int, l: int, volume: float, k: float) -> float | None:
    """Leading Weyl value of the k-th eigenvalue.

    Polyharmonic: (C_n (k/V)^(2/n))^l with C_n = 4 pi g^(2/n).
    Stokes: ((2 pi)^n / (omega_n (n-1) V))^(2/n) k^(2/n), only for l = 1;
    other orders return None.
    """
    if operator == "polyharmonic":
        c_n = FOUR_PI * gamma_half_integer(1 + n / 2) ** (2 / n)
        return (c_n * (k / volume) ** (2 / n)) ** l
    if operator == "stokes":
        if l != 1:
            return None
        return ((2 * math.pi) ** n / (unit_ball_volume(n) * (n - 1) * volume)) ** (2 / n) * k ** (2 / n)
    raise ValueError(f"unknown operator {operator!r}")


def bound(family: str, request: BoundRequest, *, as_printed: bool = False) -> BoundValue:
    """Dispatch any family name, including ``power_sum`` and ``neg_power_sum``."""
    if family == "power_sum":
        return power_sum_lower_bound(request, as_printed=as_printed)
    if family == "power_sum_two_term":
        return power_sum_lower_bound(request, two_term=True, as_printed=as_printed)
    if family == "neg_power_sum":
        return neg_power_sum_upper_bound(request, as_printed=as_printed)
    name, kind, _ = _resolve(family)
    if kind == "stokes":
        return stokes_sum_lower_bound(name, request, as_printed=as_printed)
    return eigen_sum_lower_bound(name, request, as_printed=as_printed)


@dataclass(frozen=True)
class ComparisonRow:
    k: int
    family: str
    value: float
    validity: Validity


def compare_bounds(
    families: Sequence[str],
    geometry: GeometrySummary,
    ks: Iterable[int],
    l: int = 1,
    exponent: float | None = None,
) -> list[ComparisonRow]:
    """Evaluate several families over a range of k; rows sorted by (k, family)."""
    if not families:
        raise ValueError("need at least one family")
    names = sorted({FAMILY_ALIASES.get(f, f) for f in families})
    rows = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", HypothesisWarning)
        for k in sorted(set(ks)):
            for fam in names:
                operator = "stokes" if fam in _STOKES else "polyharmonic"
                req = BoundRequest(geometry, k, l, operator, exponent)
                bv = bound(fam, req)
                rows.append(ComparisonRow(k, fam, bv.value, bv.validity))
    return rows


def four_term_from_profile(n: int, l: int, k: float, height: float, slope: float, eps: float = 1.0) -> float:
    """Four-term bound rebuilt from the profile height/slope caps.

    Evaluates the moment inequality for radial profiles with psi(0) = height,
    -psi' <= slope and mass k/(n omega_n). With height = M, slope = L this
    reproduces ``four_term``; with M_S, L_S it reproduces ``four_term_stokes``.
    Kept as an independent route for cross-checking the closed forms.
    """
    w = unit_ball_volume(n)
    d = n + 2 * l
    return (
        n / d * w ** (-2 * l / n) * height ** (-2 * l / n) * k ** (1 + 2 * l / n)
        + 2 * l * eps / (d * slope) * w ** (-(2 * l - 1) / n) * height ** (1 - (2 * l - 1) / n) * k ** (1 + (2 * l - 1) / n)
        - 5 * l / (2 * d * slope**2) * w ** (-(2 * l - 2) / n) * height ** (2 - (2 * l - 2) / n) * k ** (1 + (2 * l - 2) / n)
        + eps * l / (d * slope**3) * w ** (-(2 * l - 3) / n) * height ** (3 - (2 * l - 3) / n) * k ** (1 + (2 * l - 3) / n)
    )
