from .core import Spectrum, SpectrumSums, neumaier_cumsum, sums
from .eigensolver import EigensolverError, eigensolve_symmetric_lowest, jacobi_eigenvalues
from .exact import (
    RootFindingError,
    bessel_zeros,
    box_laplacian_exact,
    clamped_roots,
    disk_clamped_plate_exact,
    disk_laplacian_exact,
    exact_spectrum,
)
from .fd import GridError, discrete_box_laplacian, fd_spectrum, operator_matrix

__all__ = [
    "Spectrum",
    "SpectrumSums",
    "sums",
    "neumaier_cumsum",
    "EigensolverError",
    "eigensolve_symmetric_lowest",
    "jacobi_eigenvalues",
    "RootFindingError",
    "bessel_zeros",
    "clamped_roots",
    "box_laplacian_exact",
    "disk_laplacian_exact",
    "disk_clamped_plate_exact",
    "exact_spectrum",
    "GridError",
    "fd_spectrum",
    "operator_matrix",
    "discrete_box_laplacian",
]
