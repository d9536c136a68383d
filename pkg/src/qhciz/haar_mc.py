"""Monte Carlo Haar-unitary integration for the matrix-integral side.

Sampling is the standard exact construction: complex Ginibre matrix, QR
factorization, columns rescaled by the phases of the triangular factor's
diagonal.  Estimates are plain sample means with componentwise standard
errors; a fixed seed makes every estimate bit-for-bit reproducible (the
chunking schedule is deterministic).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .combinat import Partition
from .symfun import schur_eval

_CHUNK = 50_000


@dataclass(frozen=True)
class McEstimate:
    value: complex
    stderr: float
    n_samples: int
    seed: int


def sample_haar(N: int, rng: np.random.Generator) -> np.ndarray:
    """One Haar-distributed unitary N x N matrix."""
    return _haar_batch(N, 1, rng)[0]


def _haar_batch(N: int, size: int, rng: np.random.Generator) -> np.ndarray:
    g = (rng.standard_normal((size, N, N)) + 1j * rng.standard_normal((size, N, N)))
    g /= math.sqrt(2.0)
    q, r = np.linalg.qr(g)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    ph = d / np.abs(d)
    return q * ph[:, None, :]


def _mc_mean(sampler, n: int, seed: int) -> McEstimate:
    """Chunked sample mean with componentwise stderr of the mean."""
    if n < 2:
        raise ValueError("need at least 2 samples")
    rng = np.random.default_rng(seed)
    s = 0j
    s2_re = 0.0
    s2_im = 0.0
    done = 0
    while done < n:
        m = min(_CHUNK, n - done)
        w = sampler(m, rng)
        s += w.sum()
        s2_re += float(np.sum(w.real**2))
        s2_im += float(np.sum(w.imag**2))
        done += m
    mean = s / n
    var_re = max(0.0, (s2_re - n * mean.real**2) / (n - 1))
    var_im = max(0.0, (s2_im - n * mean.imag**2) / (n - 1))
    stderr = math.sqrt((var_re + var_im) / n)
    return McEstimate(complex(mean), stderr, n, seed)


def _as_matrix(m, rows: int, cols: int, name: str) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.shape != (rows, cols):
        raise ValueError(f"{name} must be {rows}x{cols}, got {a.shape}")
    return a


def mc_rhciz(A, B, C, D, z: complex, n: int, seed: int) -> McEstimate:
    """Sample mean of exp(zN tr(AUBV^-1 + VDU^-1C)) over independent Haar
    pairs U in U(N), V in U(M)."""
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2:
        raise ValueError("A must be a matrix")
    M, N = A.shape
    if M < N:
        raise ValueError("need M >= N")
    A = _as_matrix(A, M, N, "A")
    D = _as_matrix(D, M, N, "D")
    B = _as_matrix(B, N, M, "B")
    C = _as_matrix(C, N, M, "C")
    zn = complex(z) * N

    def sampler(m, rng):
        u = _haar_batch(N, m, rng)
        v = _haar_batch(M, m, rng)
        vinv = v.conj().swapaxes(-1, -2)
        uinv = u.conj().swapaxes(-1, -2)
        t1 = np.trace(A @ u @ B @ vinv, axis1=-2, axis2=-1)
        t2 = np.trace(v @ D @ uinv @ C, axis1=-2, axis2=-1)
        return np.exp(zn * (t1 + t2))

    return _mc_mean(sampler, n, seed)


def mc_bgw(P, Q, z: complex, N: int, n: int, seed: int) -> McEstimate:
    """Sample mean of exp(zN tr(PU + QU^-1)) over Haar U in U(N)."""
    P = _as_matrix(P, N, N, "P")
    Q = _as_matrix(Q, N, N, "Q")
    zn = complex(z) * N

    def sampler(m, rng):
        u = _haar_batch(N, m, rng)
        uinv = u.conj().swapaxes(-1, -2)
        t = np.trace(P @ u, axis1=-2, axis2=-1) + np.trace(
            Q @ uinv, axis1=-2, axis2=-1
        )
        return np.exp(zn * t)

    return _mc_mean(sampler, n, seed)


def mc_orbit_schur(X, Y, lam: Partition, M: int, n: int, seed: int) -> McEstimate:
    """Sample mean of the Schur polynomial of the spectrum of X V Y V^-1 over
    Haar V in U(M); the exact value is s(X) s(Y) / dim of the GL(M) module."""
    lam = Partition(lam)
    if lam.length > M:
        raise ValueError("shape has more rows than the matrix dimension")
    X = _as_matrix(X, M, M, "X")
    Y = _as_matrix(Y, M, M, "Y")

    def sampler(m, rng):
        v = _haar_batch(M, m, rng)
        vinv = v.conj().swapaxes(-1, -2)
        w = X @ v @ Y @ vinv
        eigs = np.linalg.eigvals(w)
        return np.array([complex(schur_eval(lam, tuple(e))) for e in eigs])

    return _mc_mean(sampler, n, seed)


def rhciz_reduce(A, B, C, D) -> tuple[tuple[complex, ...], tuple[complex, ...]]:
    """The N potentially nonzero eigenvalues of AC and DB, computed from the
    N x N products CA and BD (same nonzero spectrum by the characteristic
    polynomial identity for rectangular products)."""
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2:
        raise ValueError("A must be a matrix")
    M, N = A.shape
    A = _as_matrix(A, M, N, "A")
    D = _as_matrix(D, M, N, "D")
    B = _as_matrix(B, N, M, "B")
    C = _as_matrix(C, N, M, "C")
    a = np.linalg.eigvals(C @ A)
    b = np.linalg.eigvals(B @ D)
    return tuple(complex(v) for v in a), tuple(complex(v) for v in b)
