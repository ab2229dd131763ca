"""Sampled scaling functions and wavelets via the cascade algorithm.

The integer samples of phi are the eigenvector of the refinement matrix at
eigenvalue 1; the remaining dyadic samples follow by repeatedly applying the
two-scale relation on half-grids. psi is then a filtered superposition of
shifted phi samples.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .filters import normalize_scaling_filter

EIG_TOL = 1e-7


class ConstructionError(ValueError):
    """Raised when the refinement problem has no unique solution."""


@dataclass(frozen=True)
class SampledGenerators:
    """phi and psi on the grid ``l / 2**u``.

    ``phi[m] = phi(m / 2**u)`` for ``m = 0 .. K * 2**u`` and
    ``psi[m] = psi(m / 2**u)`` for ``m = 0 .. (K + M) * 2**(u - 1)``.
    """

    phi: np.ndarray
    psi: np.ndarray
    u: int
    K: int
    M: int

    @property
    def s(self) -> int:
        return (self.K + self.M) // 2

    @property
    def x_phi(self) -> np.ndarray:
        return np.arange(len(self.phi)) / 2.0**self.u

    @property
    def x_psi(self) -> np.ndarray:
        return np.arange(len(self.psi)) / 2.0**self.u


def refinement_matrix(h) -> np.ndarray:
    """K x K matrix with ``A[i, j] = h(2i - j)`` (1-based, zero-extended h)."""
    h = np.asarray(h, dtype=float)
    K = len(h) - 1
    i = np.arange(1, K + 1)[:, None]
    j = np.arange(1, K + 1)[None, :]
    k = 2 * i - j
    inside = (k >= 1) & (k <= K + 1)
    A = np.zeros((K, K))
    A[inside] = h[k[inside] - 1]
    return A


def integer_values(h) -> np.ndarray:
    """Values ``phi(0), ..., phi(K - 1)`` of the scaling function.

    ``h`` must already be normalized to sum 2. The eigenvector is scaled so
    its entries sum to 1.
    """
    A = refinement_matrix(h)
    w, V = np.linalg.eig(A)
    hits = np.flatnonzero(np.abs(w - 1.0) < EIG_TOL)
    if len(hits) != 1:
        raise ConstructionError(
            "impossible to construct scaling function: eigenvalue 1 must have "
            f"multiplicity 1 (found {len(hits)})")
    v = np.real(V[:, hits[0]])
    total = v.sum()
    if abs(total) < 1e-14:
        raise ConstructionError("eigenvector at eigenvalue 1 sums to zero")
    return v / total


def _refine(phi, h, K, u):
    # fill odd multiples of 2**-i, i = 1..u, from already known coarser samples
    kk = np.arange(1, K + 2)
    for i in range(1, u + 1):
        stride = 2 ** (u - i)
        # m = x * 2**u with x = 2**-i + (l - 1) * 2**(1 - i), l = 1 .. K * 2**(i-1)
        m = stride * (2 * np.arange(K * 2 ** (i - 1)) + 1)
        # sample index of phi(2x - k + 1) on the 2**u grid
        src = 2 * m[:, None] + (1 - kk[None, :]) * 2**u
        ok = (src >= 0) & (src <= K * 2**u)
        vals = np.where(ok, phi[np.clip(src, 0, K * 2**u)], 0.0)
        phi[m] = vals @ h


def wavelet_gen(h, g, u: int) -> SampledGenerators:
    """Sample phi and psi on the dyadic grid of level ``u >= 1``.

    Parameters
    ----------
    h, g : array_like
        Scaling and wavelet filter. ``h`` is normalized to sum 2 internally;
        ``g`` is used as given.
    u : int
        Refinement level; samples are spaced ``2**-u`` apart.
    """
    if int(u) != u or u < 1:
        raise ValueError(f"refinement level must be an integer >= 1, got {u!r}")
    u = int(u)
    h = normalize_scaling_filter(h)
    g = np.asarray(g, dtype=float)
    K = len(h) - 1
    M = len(g) - 1
    if K < 1 or M < 0:
        raise ValueError("filters must have at least two scaling and one wavelet coefficient")

    phi = np.zeros(K * 2**u + 1)
    phi[0:(K - 1) * 2**u + 1:2**u] = integer_values(h)
    _refine(phi, h, K, u)

    half = 2 ** (u - 1)
    psi = np.zeros((K + M) * half + 1)
    coarse = phi[::2]
    for k in range(M + 1):
        psi[k * half:k * half + K * half + 1] += g[k] * coarse
    return SampledGenerators(phi=phi, psi=psi, u=u, K=K, M=M)
