"""Eigenvalue-sum bounds for clamped polyharmonic and Stokes problems, with reference spectra."""

from .geometry import Domain, GeometrySummary, parse_domain, rearrangement_constants, summarize
from .special import unit_ball_volume

__version__ = "0.1.0"

__all__ = [
    "Domain",
    "GeometrySummary",
    "parse_domain",
    "rearrangement_constants",
    "summarize",
    "unit_ball_volume",
]
