"""Lowest eigenvalues of symmetric positive definite operators.

Lanczos with full reorthogonalization. A single Krylov sequence only sees
one vector of each eigenspace, so converged Ritz vectors are locked and the
iteration restarts from a fresh deterministic vector orthogonal to them,
until a restart finds nothing new among the wanted eigenvalues. A
parallel-ordered Jacobi sweep solver is the dense fallback.
"""

from __future__ import annotations

import logging
from typing import Callable

import numpy as np
from scipy.linalg import eigh_tridiagonal

log = logging.getLogger(__name__)

Matvec = Callable[[np.ndarray], np.ndarray]

JACOBI_MAX_DIM = 2000


class EigensolverError(RuntimeError):
    """Lanczos failed to converge or broke down repeatedly."""


def start_vector(dim: int, attempt: int = 0) -> np.ndarray:
    """Deterministic, generic start vector (no randomness)."""
    i = np.arange(dim, dtype=float)
    phase = 0.6180339887498949 * (attempt + 1)
    v = 1.0 + 0.5 * np.sin(1.3 * i + phase) + 0.25 * np.cos(0.017 * i * (attempt + 2) + 2.0 * phase)
    return v / np.linalg.norm(v)


def _orthogonalize(v, blocks):
    # two passes of classical Gram-Schmidt
    for _ in range(2):
        for b in blocks:
            if b.shape[1]:
                v = v - b @ (b.T @ v)
    return v


def _lanczos_run(apply, dim, want, locked, attempt, tol, max_steps):
    """One Lanczos sequence in the orthogonal complement of ``locked``.

    Returns Ritz values (descending) with residual estimates and Ritz vectors.
    """
    q = _orthogonalize(start_vector(dim, attempt), [locked])
    norm = np.linalg.norm(q)
    if norm < 1e-8:
        return np.empty(0), np.empty(0), np.empty((dim, 0))
    basis = np.zeros((dim, max_steps + 1))
    basis[:, 0] = q / norm
    alpha = np.zeros(max_steps)
    beta = np.zeros(max_steps)
    steps = 0
    check_every = max(10, want)
    theta = res = s = None
    for j in range(max_steps):
        w = apply(basis[:, j])
        alpha[j] = basis[:, j] @ w
        w = w - alpha[j] * basis[:, j]
        if j > 0:
            w = w - beta[j - 1] * basis[:, j - 1]
        w = _orthogonalize(w, [basis[:, : j + 1], locked])
        beta[j] = np.linalg.norm(w)
        steps = j + 1
        scale = max(abs(alpha[: j + 1]).max(), 1e-300)
        breakdown = beta[j] <= 1e-13 * scale
        if breakdown or steps == max_steps or (steps >= want and steps % check_every == 0):
            theta, s = eigh_tridiagonal(alpha[:steps], beta[: steps - 1])
            order = np.argsort(theta)[::-1]
            theta, s = theta[order], s[:, order]
            res = np.abs(beta[j] * s[-1, :])
            m = min(want, steps)
            if breakdown or np.all(res[:m] <= tol * np.abs(theta[0])):
                break
        if breakdown:
            break
        basis[:, j + 1] = w / beta[j]
    if theta is None:
        return np.empty(0), np.empty(0), np.empty((dim, 0))
    if beta[steps - 1] <= 1e-13 * max(abs(alpha[:steps]).max(), 1e-300):
        res = np.zeros_like(res)
    vectors = basis[:, :steps] @ s
    return theta, res, vectors


def lanczos_largest(
    apply: Matvec,
    dim: int,
    k: int,
    *,
    tol: float = 1e-12,
    max_restarts: int = 60,
) -> np.ndarray:
    """The k largest eigenvalues of a symmetric operator, with multiplicity."""
    if k > dim:
        raise ValueError(f"requested {k} eigenvalues of a {dim}-dimensional operator")
    locked_vals: list[float] = []
    locked = np.empty((dim, 0))
    quiet_rounds = 0
    for attempt in range(max_restarts):
        max_steps = min(dim - locked.shape[1], max(3 * k + 40, 80))
        if max_steps <= 0:
            break
        theta, res, vecs = _lanczos_run(apply, dim, k, locked, attempt, tol, max_steps)
        if theta.size == 0:
            quiet_rounds += 1
            if quiet_rounds >= 2:
                break
            continue
        threshold = np.sort(locked_vals)[::-1][k - 1] if len(locked_vals) >= k else -np.inf
        good = (res <= tol * max(abs(theta[0]), 1e-300)) & (theta > threshold)
        if not np.any(good):
            if len(locked_vals) >= k:
                quiet_rounds += 1
                # a second fresh start confirms nothing was missed
                if quiet_rounds >= 2:
                    break
                continue
            raise EigensolverError(
                f"Lanczos made no progress (attempt {attempt}, best residual {res[: k].min():.3e})"
            )
        quiet_rounds = 0
        new = vecs[:, good]
        new = _orthogonalize(new, [locked])
        qmat, _ = np.linalg.qr(new)
        locked = np.hstack([locked, qmat])
        locked_vals.extend(theta[good].tolist())
        log.debug("attempt %d locked %d (total %d)", attempt, int(good.sum()), len(locked_vals))
    else:
        raise EigensolverError(f"no convergence after {max_restarts} restarts")
    if len(locked_vals) < k:
        raise EigensolverError(f"only {len(locked_vals)} of {k} eigenvalues converged")
    return np.sort(np.asarray(locked_vals))[::-1][:k]


def jacobi_eigenvalues(a: np.ndarray, *, tol: float = 1e-14, max_sweeps: int = 60) -> np.ndarray:
    """All eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.

    Rotations are applied in round-robin order, n/2 disjoint pairs at a time.
    """
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    if n == 1:
        return a.ravel().copy()
    if not np.allclose(a, a.T, rtol=0, atol=1e-12 * max(np.abs(a).max(), 1.0)):
        raise ValueError("jacobi_eigenvalues needs a symmetric matrix")
    m = n + (n % 2)
    players = list(range(m))
    total = np.linalg.norm(a)
    for _ in range(max_sweeps):
        off = np.sqrt(max(np.sum(a * a) - np.sum(np.diag(a) ** 2), 0.0))
        if off <= tol * total:
            return np.sort(np.diag(a))
        for _ in range(m - 1):
            p = np.array(players[: m // 2])
            q = np.array(players[m // 2 :][::-1])
            keep = (p < n) & (q < n)
            p, q = p[keep], q[keep]
            apq = a[p, q]
            active = np.abs(apq) > 1e-300
            p, q, apq = p[active], q[active], apq[active]
            if p.size:
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(tau) / (np.abs(tau) + np.sqrt(1.0 + tau * tau))
                t[tau == 0] = 1.0
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c[:, None] * rp - s[:, None] * rq
                a[q, :] = s[:, None] * rp + c[:, None] * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = cp * c - cq * s
                a[:, q] = cp * s + cq * c
            # round-robin rotation with the first player fixed
            players = [players[0]] + [players[-1]] + players[1:-1]
    raise EigensolverError("Jacobi sweeps did not converge")


def eigensolve_symmetric_lowest(
    matvec: Matvec,
    dim: int,
    k: int,
    *,
    solve: Matvec | None = None,
    tol: float = 1e-12,
    dense: np.ndarray | None = None,
) -> np.ndarray:
    """The k smallest eigenvalues of a symmetric positive definite operator.

    Parameters
    ----------
    matvec : callable
        x -> A x.
    dim : int
        Size of A.
    k : int
        Number of eigenvalues wanted (with multiplicity).
    solve : callable, optional
        x -> A^{-1} x. When given, Lanczos runs on A^{-1}, whose largest
        eigenvalues are the reciprocals of the wanted ones and converge fast.
        Without it Lanczos runs on the shifted operator sigma*I - A.
    dense : ndarray, optional
        The matrix itself, used by the Jacobi fallback when Lanczos fails
        and dim <= 2000. Built from ``matvec`` if missing.

    Returns
    -------
    ndarray
        Ascending eigenvalues.
    """
    if k < 1 or k > dim:
        raise ValueError(f"k must be in [1, {dim}], got {k}")
    try:
        if solve is not None:
            mu = lanczos_largest(solve, dim, k, tol=tol)
            return np.sort(1.0 / mu)
        # Gershgorin-free shift: a few power steps bound the top of the spectrum
        sigma = _spectral_radius(matvec, dim) * 1.01
        mu = lanczos_largest(lambda x: sigma * x - matvec(x), dim, k, tol=tol)
        return np.sort(sigma - mu)
    except EigensolverError as exc:
        if dim > JACOBI_MAX_DIM:
            raise
        log.warning("Lanczos failed (%s); falling back to dense Jacobi", exc)
        if dense is None:
            dense = np.column_stack([matvec(e) for e in np.eye(dim)])
        return jacobi_eigenvalues(dense)[:k]


def _spectral_radius(matvec, dim, iters=60):
    v = start_vector(dim, 7)
    lam = 0.0
    for _ in range(iters):
        w = matvec(v)
        lam = np.linalg.norm(w)
        if lam == 0:
            return 1.0
        v = w / lam
    # power iteration underestimates; pad by a Rayleigh-based margin
    return lam * 1.05
