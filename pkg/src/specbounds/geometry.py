"""Domains and the geometric data the eigenvalue bounds consume.

Every bound only needs the volume |Omega| and the moment of inertia
I(Omega) = min_a int_Omega |x - a|^2 dx, which is attained at the centroid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .special import gamma_half_integer, unit_ball_volume

__all__ = [
    "Domain",
    "GeometrySummary",
    "RearrangementConstants",
    "summarize",
    "unit_ball_volume",
    "rearrangement_constants",
    "inertia_floor",
    "parse_domain",
    "DomainError",
]

SHAPES = ("box", "ball", "ellipse", "polygon")


class DomainError(ValueError):
    """Invalid or degenerate domain description."""


@dataclass(frozen=True)
class Domain:
    kind: str
    params: tuple[float, ...] = ()
    dimension: int = 2
    vertices: tuple[tuple[float, float], ...] = ()
    label: str = ""

    def __post_init__(self):
        if self.kind not in SHAPES:
            raise DomainError(f"unknown shape {self.kind!r}; expected one of {SHAPES}")
        if self.kind == "polygon":
            _validate_polygon(self.vertices)
            return
        if self.dimension < 1:
            raise DomainError(f"dimension must be >= 1, got {self.dimension}")
        if any(not (p > 0 and math.isfinite(p)) for p in self.params):
            raise DomainError(f"{self.kind} parameters must be positive and finite: {self.params}")
        if self.kind == "ball" and len(self.params) != 1:
            raise DomainError("ball takes a single radius")
        if self.kind in ("box", "ellipse") and len(self.params) != self.dimension:
            raise DomainError(f"{self.kind} needs {self.dimension} lengths, got {len(self.params)}")

    @classmethod
    def box(cls, lengths: Sequence[float], label: str = "") -> "Domain":
        lengths = tuple(float(a) for a in lengths)
        return cls("box", lengths, len(lengths), label=label or _default_label("box", lengths))

    @classmethod
    def ball(cls, radius: float, n: int = 2, label: str = "") -> "Domain":
        name = "disk" if n == 2 else "ball"
        return cls("ball", (float(radius),), n, label=label or _default_label(name, (radius,)))

    @classmethod
    def ellipse(cls, semi_axes: Sequence[float], label: str = "") -> "Domain":
        axes = tuple(float(a) for a in semi_axes)
        return cls("ellipse", axes, len(axes), label=label or _default_label("ellipse", axes))

    @classmethod
    def polygon(cls, vertices: Sequence[Sequence[float]], label: str = "") -> "Domain":
        verts = tuple((float(x), float(y)) for x, y in vertices)
        return cls("polygon", (), 2, verts, label=label or f"polygon{len(verts)}")

    @property
    def n(self) -> int:
        return self.dimension

    def scaled(self, c: float) -> "Domain":
        if self.kind == "polygon":
            return Domain.polygon([(c * x, c * y) for x, y in self.vertices])
        return Domain(self.kind, tuple(c * p for p in self.params), self.dimension)

    def translated(self, shift: Sequence[float]) -> "Domain":
        if self.kind != "polygon":
            # the remaining shapes carry no position
            return self
        dx, dy = shift
        return Domain.polygon([(x + dx, y + dy) for x, y in self.vertices], self.label)


def _default_label(name, params):
    return name + ":" + "x".join(f"{p:g}" for p in params)


@dataclass(frozen=True)
class GeometrySummary:
    volume: float
    inertia: float
    dimension: int

    def __post_init__(self):
        if not (self.volume > 0 and self.inertia > 0):
            raise DomainError(f"volume and inertia must be positive: {self}")


@dataclass(frozen=True)
class RearrangementConstants:
    """Height and slope caps of the Fourier density (plain and Stokes)."""

    m: float
    lcap: float
    m_s: float
    l_s: float


def _validate_polygon(verts):
    if len(verts) < 3:
        raise DomainError("polygon needs at least 3 vertices")
    if not all(math.isfinite(c) for v in verts for c in v):
        raise DomainError("polygon vertices must be finite")
    area = _signed_area(verts)
    if area == 0:
        raise DomainError("degenerate polygon (zero area)")
    if area < 0:
        raise DomainError("polygon vertices must be listed counterclockwise")
    m = len(verts)
    for i in range(m):
        a, b = verts[i], verts[(i + 1) % m]
        for j in range(i + 1, m):
            if j == i or (j + 1) % m == i or j == (i + 1) % m:
                continue
            c, d = verts[j], verts[(j + 1) % m]
            if _segments_intersect(a, b, c, d):
                raise DomainError(f"polygon is not simple: edges {i} and {j} intersect")


def _orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _on_segment(a, b, p):
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _segments_intersect(a, b, c, d):
    o1, o2, o3, o4 = _orient(a, b, c), _orient(a, b, d), _orient(c, d, a), _orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return (
        (o1 == 0 and _on_segment(a, b, c))
        or (o2 == 0 and _on_segment(a, b, d))
        or (o3 == 0 and _on_segment(c, d, a))
        or (o4 == 0 and _on_segment(c, d, b))
    )


def _signed_area(verts):
    m = len(verts)
    return 0.5 * math.fsum(
        verts[i][0] * verts[(i + 1) % m][1] - verts[(i + 1) % m][0] * verts[i][1] for i in range(m)
    )


def _polygon_moments(verts):
    # shift to the vertex mean first so the centroid correction below
    # does not cancel against a large offset
    m = len(verts)
    ox = math.fsum(v[0] for v in verts) / m
    oy = math.fsum(v[1] for v in verts) / m
    pts = [(x - ox, y - oy) for x, y in verts]
    cross, cx, cy, ixx, iyy = [], [], [], [], []
    for i in range(m):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % m]
        c = x0 * y1 - x1 * y0
        cross.append(c)
        cx.append((x0 + x1) * c)
        cy.append((y0 + y1) * c)
        ixx.append((y0 * y0 + y0 * y1 + y1 * y1) * c)
        iyy.append((x0 * x0 + x0 * x1 + x1 * x1) * c)
    area = 0.5 * math.fsum(cross)
    gx = math.fsum(cx) / (6.0 * area)
    gy = math.fsum(cy) / (6.0 * area)
    polar = (math.fsum(ixx) + math.fsum(iyy)) / 12.0
    return area, polar - area * (gx * gx + gy * gy)


def summarize(domain: Domain) -> GeometrySummary:
    """Volume and centroidal moment of inertia of ``domain``.

    Closed forms for box, ball and ellipsoid; exact vertex sums for polygons.
    """
    n = domain.dimension
    if domain.kind == "box":
        vol = math.prod(domain.params)
        inertia = vol * math.fsum(a * a for a in domain.params) / 12.0
    elif domain.kind == "ball":
        (r,) = domain.params
        vol = unit_ball_volume(n) * r**n
        inertia = n * vol * r * r / (n + 2)
    elif domain.kind == "ellipse":
        vol = unit_ball_volume(n) * math.prod(domain.params)
        inertia = vol * math.fsum(a * a for a in domain.params) / (n + 2)
    else:
        vol, inertia = _polygon_moments(domain.vertices)
    if not (vol > 0 and inertia > 0):
        raise DomainError(f"degenerate domain {domain.label}: volume={vol}, inertia={inertia}")
    return GeometrySummary(vol, inertia, n)


def inertia_floor(volume: float, n: int) -> float:
    """Smallest possible I(Omega) at the given volume (attained by the ball)."""
    return n / (n + 2) * (volume / unit_ball_volume(n)) ** (2.0 / n) * volume


def rearrangement_constants(summary: GeometrySummary) -> RearrangementConstants:
    n = summary.dimension
    vol, inertia = summary.volume, summary.inertia
    scale = (2.0 * math.pi) ** n
    m = vol / scale
    lcap = 2.0 * math.sqrt(vol * inertia) / scale
    return RearrangementConstants(
        m=m,
        lcap=lcap,
        m_s=(n - 1) * m,
        l_s=math.sqrt(n * (n - 1)) * lcap,
    )


def gamma_ratio(summary: GeometrySummary) -> float:
    """Gamma(1 + n/2) / |Omega|, the base of every Weyl-type coefficient."""
    return gamma_half_integer(1 + summary.dimension / 2) / summary.volume


# --- plain-text domain descriptions -----------------------------------------

_ALIASES = {"square": ("box", {"lengths": "1,1"}), "disk": ("ball", {"radius": "1", "n": "2"})}


def _floats(text: str) -> list[float]:
    return [float(t) for t in text.replace(";", ",").split(",") if t.strip()]


def parse_domain(text: str) -> Domain:
    """Build a Domain from ``key=value`` tokens.

    Examples: ``shape=box lengths=1,2``, ``shape=disk radius=1``,
    ``shape=ball radius=1 n=3``, ``shape=ellipse axes=2,1``,
    ``shape=polygon vertices=0:0,1:0,1:1,0:1``. The bare names
    ``square`` and ``disk`` give the unit square and unit disk.
    """
    tokens = text.split()
    fields: dict[str, str] = {}
    for tok in tokens:
        if "=" not in tok:
            if tok in _ALIASES and "shape" not in fields:
                fields["shape"] = tok
                continue
            raise DomainError(f"expected key=value, got {tok!r}")
        key, value = tok.split("=", 1)
        fields[key.strip().lower()] = value.strip()
    shape = fields.pop("shape", None)
    if shape is None:
        raise DomainError("domain description needs a shape")
    label = fields.pop("label", "")
    if shape in _ALIASES:
        base, defaults = _ALIASES[shape]
        for key, value in defaults.items():
            fields.setdefault(key, value)
        if shape == "square" and "side" in fields:
            side = fields.pop("side")
            fields["lengths"] = f"{side},{side}"
        label = label or (shape if fields == {**defaults} else "")
        shape = base
    try:
        if shape == "box":
            return Domain.box(_floats(fields["lengths"]), label)
        if shape == "ball":
            return Domain.ball(float(fields["radius"]), int(fields.get("n", 2)), label)
        if shape == "ellipse":
            return Domain.ellipse(_floats(fields["axes"]), label)
        if shape == "polygon":
            verts = []
            for pair in fields["vertices"].split(","):
                x, y = pair.split(":")
                verts.append((float(x), float(y)))
            return Domain.polygon(verts, label)
    except KeyError as exc:
        raise DomainError(f"{shape} description is missing {exc.args[0]!r}") from None
    raise DomainError(f"unknown shape {shape!r}")
