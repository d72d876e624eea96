import math

import mpmath
import numpy as np
import pytest
import scipy.sparse as sp
from scipy.sparse.linalg import splu

from specbounds.geometry import Domain
from specbounds.spectra import (
    GridError,
    Spectrum,
    bessel_zeros,
    box_laplacian_exact,
    disk_clamped_plate_exact,
    disk_laplacian_exact,
    discrete_box_laplacian,
    eigensolve_symmetric_lowest,
    exact_spectrum,
    fd_spectrum,
    jacobi_eigenvalues,
    neumaier_cumsum,
    operator_matrix,
    sums,
)


def test_square_exact_first_values():
    ev = box_laplacian_exact([1, 1], 6).eigenvalues / math.pi**2
    assert np.allclose(ev, [2, 5, 5, 8, 10, 10])


def test_box_exact_against_brute_force():
    a, b = 1.0, 3.0
    brute = sorted(math.pi**2 * ((i / a) ** 2 + (j / b) ** 2) for i in range(1, 40) for j in range(1, 80))
    assert np.allclose(box_laplacian_exact([a, b], 150).eigenvalues, brute[:150], rtol=1e-15)


@pytest.mark.parametrize("m", [0, 1, 4, 11])
def test_bessel_zeros_against_mpmath(m):
    zs = bessel_zeros(m, 40.0)
    want = []
    p = 1
    while True:
        z = float(mpmath.besseljzero(m, p))
        if z > 40:
            break
        want.append(z)
        p += 1
    assert np.allclose(zs, want, rtol=0, atol=1e-12)


def test_disk_multiplicities():
    ev = disk_laplacian_exact(1.0, 6).eigenvalues
    assert ev[0] == pytest.approx(float(mpmath.besseljzero(0, 1)) ** 2, rel=1e-13)
    assert ev[1] == ev[2]  # m = 1 doubled
    assert ev[3] == ev[4]  # m = 2 doubled


def test_clamped_disk_first_value_against_mpmath():
    f = lambda x: mpmath.besselj(0, x) * mpmath.besseli(1, x) + mpmath.besseli(0, x) * mpmath.besselj(1, x)  # noqa: E731
    x1 = mpmath.findroot(f, 3.2)
    ev = disk_clamped_plate_exact(1.0, 3).eigenvalues
    assert ev[0] == pytest.approx(float(x1) ** 4, rel=1e-12)
    assert ev[0] == pytest.approx(104.3631, rel=1e-6)
    assert ev[1] == ev[2]


def test_radius_scaling():
    a = disk_clamped_plate_exact(1.0, 5).eigenvalues
    b = disk_clamped_plate_exact(2.0, 5).eigenvalues
    assert np.allclose(b, a / 16, rtol=1e-13)


def test_exact_dispatch_rejects_unknown():
    with pytest.raises(ValueError):
        exact_spectrum(Domain.ellipse([2, 1]), 1, 3)


def test_jacobi_matches_numpy():
    rng = np.random.default_rng(0)
    a = rng.standard_normal((30, 30))
    a = a + a.T
    assert np.allclose(jacobi_eigenvalues(a), np.linalg.eigvalsh(a), atol=1e-11)


def test_lanczos_finds_repeated_eigenvalues():
    d = np.array([1.0, 2.0, 2.0, 2.0, 3.0] + list(np.linspace(4, 50, 300)))
    rng = np.random.default_rng(3)
    q, _ = np.linalg.qr(rng.standard_normal((d.size, d.size)))
    a = (q * d) @ q.T
    got = eigensolve_symmetric_lowest(lambda x: a @ x, d.size, 5, solve=lambda x: np.linalg.solve(a, x))
    assert np.allclose(got, [1, 2, 2, 2, 3], atol=1e-10)
    got = eigensolve_symmetric_lowest(lambda x: a @ x, d.size, 5)
    assert np.allclose(got, [1, 2, 2, 2, 3], atol=1e-8)


def test_fd_square_matches_discrete_closed_form():
    h = 1 / 32
    got = fd_spectrum(Domain.box([1, 1]), 1, h, 20).eigenvalues
    want = discrete_box_laplacian([1, 1], h, 20)
    assert np.max(np.abs(got - want) / want) < 1e-9


def test_bilaplacian_box_stencil_is_symmetric_positive():
    a = operator_matrix(Domain.box([1, 1]), 2, 1 / 16)
    assert abs(a - a.T).max() < 1e-9
    assert np.all(np.linalg.eigvalsh(a.toarray()) > 0)


def test_polar_disk_laplacian_close_to_exact():
    ev = fd_spectrum(Domain.ball(1.0), 1, 1 / 32, 3).eigenvalues
    exact = disk_laplacian_exact(1.0, 3).eigenvalues
    assert np.max(np.abs(ev - exact) / exact) < 5e-3


def test_fd_grid_errors():
    with pytest.raises(GridError):
        fd_spectrum(Domain.box([1, 1]), 1, 0.3, 2)
    with pytest.raises(GridError):
        fd_spectrum(Domain.box([1, 1]), 1, 0.25, 50)
    with pytest.raises(ValueError):
        operator_matrix(Domain.box([1, 1]), 3, 0.25)


def test_spectrum_validation_and_csv():
    dom = Domain.box([1, 1])
    with pytest.raises(ValueError):
        Spectrum("polyharmonic", 1, dom, "x", [2.0, 1.0])
    with pytest.raises(ValueError):
        Spectrum("polyharmonic", 1, dom, "x", [0.0, 1.0])
    s = Spectrum("polyharmonic", 1, dom, "x", [1.0, 2.5])
    assert s.to_csv() == "index,eigenvalue\n1,1\n2,2.5\n"
    with pytest.raises(ValueError):
        s.eigenvalues[0] = 3.0


def test_sums_and_powers():
    s = box_laplacian_exact([1, 1], 10)
    part, power = sums(s, 10, q=0.5, p=0.5)
    assert part.partial_sums[-1] == pytest.approx(math.fsum(s.eigenvalues))
    assert power["q"] == pytest.approx(math.fsum(np.sqrt(s.eigenvalues)))
    assert power["p"] == pytest.approx(math.fsum(1 / np.sqrt(s.eigenvalues)))
    with pytest.raises(ValueError):
        s.sums(11)


def test_neumaier_recovers_cancelled_terms():
    vals = [1e16, 1.0, -1e16, 1.0]
    assert neumaier_cumsum(vals)[-1] == 2.0
