"""Finite-difference spectra of (-Delta)^l, l in {1, 2}, with clamped conditions.

Box (grid-aligned nodes, boundary nodes hold u = 0):
    l = 1: 5-point Laplacian.
    l = 2: 13-point bilaplacian; a distance-2 neighbour beyond the boundary
    is a ghost equal to its mirror image through the boundary node, which is
    the centred form of du/dnu = 0.

Disk, ``grid="polar"`` (default): nodes at r_i = (i - 1/2) dr, with the
boundary circle itself a node ring. The discrete Laplacian E is evaluated
on interior and boundary rings with the same mirror ghost, and the
bilaplacian is E^T Q E against the area weights Q (halved on the boundary
ring). On the box this construction reproduces the 13-point stencil
exactly; on the disk it keeps second-order convergence that a staircase
boundary loses.

Disk, ``grid="cartesian"``: the box stencils on the nodes inside the disk,
with the first layer outside acting as the boundary. First-order accurate
in h because of the staircase.
"""

from __future__ import annotations

import math

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import splu

from ..geometry import Domain
from .core import Spectrum
from .eigensolver import eigensolve_symmetric_lowest


class GridError(ValueError):
    pass


def _assemble(rows, cols, vals, size):
    return sp.csr_matrix((vals, (rows, cols)), shape=(size, size))


def _mask_operator(inside: np.ndarray, h: float, l: int) -> sp.csr_matrix:
    """Stencil operator on the True nodes of ``inside`` (padded by >= 2 False layers)."""
    num = -np.ones(inside.shape, dtype=np.int64)
    num[inside] = np.arange(int(inside.sum()))
    ii, jj = np.nonzero(inside)
    p = num[ii, jj]
    rows, cols, vals = [], [], []
    diag = np.full(p.size, 4.0 if l == 1 else 20.0)
    if l == 1:
        couplings = [((1, 0), -1.0), ((-1, 0), -1.0), ((0, 1), -1.0), ((0, -1), -1.0)]
    else:
        couplings = [((1, 0), -8.0), ((-1, 0), -8.0), ((0, 1), -8.0), ((0, -1), -8.0)]
        couplings += [((1, 1), 2.0), ((1, -1), 2.0), ((-1, 1), 2.0), ((-1, -1), 2.0)]
        couplings += [((2, 0), 1.0), ((-2, 0), 1.0), ((0, 2), 1.0), ((0, -2), 1.0)]
    for (di, dj), w in couplings:
        q = num[ii + di, jj + dj]
        hit = q >= 0
        rows.append(p[hit])
        cols.append(q[hit])
        vals.append(np.full(int(hit.sum()), w))
        if abs(di) == 2 or abs(dj) == 2:
            # ghost: the node in between is on the boundary, mirror gives u_ghost = u_P
            mid_out = ~inside[ii + di // 2, jj + dj // 2]
            diag += np.where(~hit & mid_out, w, 0.0)
    rows.append(p)
    cols.append(p)
    vals.append(diag)
    a = _assemble(np.concatenate(rows), np.concatenate(cols), np.concatenate(vals), p.size)
    return a / h ** (2 * l)


def box_operator(lengths, h: float, l: int) -> tuple[sp.csr_matrix, tuple[int, int]]:
    """Discrete (-Delta)^l on the interior nodes of [0, a] x [0, b]."""
    nx = _cells(lengths[0], h)
    ny = _cells(lengths[1], h)
    if nx < 2 or ny < 2:
        raise GridError(f"grid step {h} leaves no interior nodes")
    pad = 2
    inside = np.zeros((nx + 1 + 2 * pad, ny + 1 + 2 * pad), dtype=bool)
    inside[pad + 1 : pad + nx, pad + 1 : pad + ny] = True
    return _mask_operator(inside, h, l), (nx - 1, ny - 1)


def _cells(length, h):
    n = int(round(length / h))
    if not math.isclose(n * h, length, rel_tol=1e-9, abs_tol=1e-12):
        raise GridError(f"edge length {length} is not a multiple of h = {h}")
    return n


def disk_cartesian_operator(radius: float, h: float, l: int) -> sp.csr_matrix:
    half = int(math.ceil(radius / h)) + 3
    idx = np.arange(-half, half + 1) * h
    x, y = np.meshgrid(idx, idx, indexing="ij")
    inside = x * x + y * y < radius * radius * (1 - 1e-12)
    return _mask_operator(inside, h, l)


def polar_parts(radius: float, h: float):
    """Polar-grid pieces: Laplacian rows E, ring weights Q and interior mass W.

    ``E`` maps interior unknowns (rings 1..N-1) to Laplacian values on rings
    1..N, ring N being the boundary circle.
    """
    n_rings = int(round(radius / h))
    if n_rings < 3:
        raise GridError(f"grid step {h} too coarse for radius {radius}")
    dr = radius / (n_rings - 0.5)
    n_theta = max(8, 4 * int(math.ceil(math.pi * radius / (2 * h))))
    dt = 2 * math.pi / n_theta
    r = (np.arange(1, n_rings + 1) - 0.5) * dr
    j = np.arange(n_theta)
    rows, cols, vals = [], [], []

    def couple(ring_row, ring_col, shift, weight):
        # ring_col == N (the boundary circle) holds u = 0; N + 1 mirrors to N - 1
        if ring_col == n_rings + 1:
            ring_col = n_rings - 1
        if ring_col == n_rings or ring_col < 1:
            return
        rows.append((ring_row - 1) * n_theta + j)
        cols.append((ring_col - 1) * n_theta + (j + shift) % n_theta)
        vals.append(np.full(n_theta, weight))

    for i in range(1, n_rings + 1):
        ri = r[i - 1]
        r_out, r_in = i * dr, (i - 1) * dr
        radial = 1.0 / (ri * dr * dr)
        angular = 1.0 / (ri * ri * dt * dt)
        couple(i, i, 0, -(r_out + r_in) * radial - 2 * angular)
        couple(i, i - 1, 0, r_in * radial)
        couple(i, i + 1, 0, r_out * radial)
        couple(i, i, 1, angular)
        couple(i, i, -1, angular)
    e = sp.csr_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(n_rings * n_theta, (n_rings - 1) * n_theta),
    )
    q = np.repeat(r * dr * dt, n_theta)
    q[(n_rings - 1) * n_theta :] *= 0.5
    w = np.repeat(r[:-1] * dr * dt, n_theta)
    return e, q, w


def disk_polar_operator(radius: float, h: float, l: int) -> sp.csr_matrix:
    """Symmetrized W^{-1/2} A W^{-1/2} for the polar-grid disk."""
    e, q, w = polar_parts(radius, h)
    m = w.size
    if l == 1:
        a = -(sp.diags(q[:m]) @ e[:m])
    else:
        a = e.T @ sp.diags(q) @ e
    s = sp.diags(1.0 / np.sqrt(w))
    return (s @ a @ s).tocsr()


def operator_matrix(domain: Domain, l: int, h: float, grid: str = "polar") -> sp.csr_matrix:
    if l not in (1, 2):
        raise ValueError(f"finite differences are available for l = 1, 2 only, got {l}")
    if domain.kind == "box" and domain.dimension == 2:
        return box_operator(domain.params, h, l)[0]
    if domain.kind == "ball" and domain.dimension == 2:
        (radius,) = domain.params
        if grid == "polar":
            return disk_polar_operator(radius, h, l)
        if grid == "cartesian":
            return disk_cartesian_operator(radius, h, l)
        raise ValueError(f"unknown disk grid {grid!r}")
    raise ValueError(f"finite differences support 2D boxes and disks, not {domain.label}")


def fd_spectrum(domain: Domain, l: int, h: float, k: int, *, grid: str = "polar") -> Spectrum:
    """k smallest eigenvalues of the discretized clamped problem."""
    a = operator_matrix(domain, l, h, grid).tocsc()
    dim = a.shape[0]
    if k > dim:
        raise GridError(f"k = {k} exceeds the {dim} interior unknowns at h = {h}")
    asym = abs(a - a.T).max() if dim else 0.0
    if asym > 1e-9 * abs(a).max():
        raise GridError(f"discrete operator is not symmetric (defect {asym:.3e})")
    lu = splu(a)
    vals = eigensolve_symmetric_lowest(lambda x: a @ x, dim, k, solve=lu.solve)
    method = "finite-difference" if domain.kind == "box" or grid == "polar" else "finite-difference-cartesian"
    return Spectrum("polyharmonic", l, domain, method, vals, grid_step=h)


def discrete_box_laplacian(lengths, h: float, k: int) -> np.ndarray:
    """Closed-form eigenvalues of the 5-point Laplacian on a box grid."""
    nx, ny = _cells(lengths[0], h), _cells(lengths[1], h)
    m1 = np.arange(1, nx)
    m2 = np.arange(1, ny)
    vx = 4 / h**2 * np.sin(np.pi * m1 * h / (2 * lengths[0])) ** 2
    vy = 4 / h**2 * np.sin(np.pi * m2 * h / (2 * lengths[1])) ** 2
    return np.sort((vx[:, None] + vy[None, :]).ravel())[:k]
