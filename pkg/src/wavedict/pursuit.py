"""Optimized Orthogonal Matching Pursuit (OOMP).

At every step the atom that minimizes the norm of the new residual is added,
i.e. the maximizer of ``<d_n, r>**2 / ||d_n - P d_n||**2`` where ``P`` projects
onto the span of the atoms already chosen. The chosen atoms are kept as an
orthonormal set (two-pass Gram-Schmidt), the out-of-span components of all
candidates are deflated against each new basis vector, and the coefficients
come from the accumulated triangular factor.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

# candidates whose out-of-span component falls to this norm are dropped for good
DEPENDENCE_TOL = 1e-7
# criteria within TIE_RTOL * ||f||**2 of the best count as ties -> lowest index
TIE_RTOL = 1e-12


@dataclass
class PursuitResult:
    """Outcome of one OOMP run.

    ``indices`` are 0-based column indices in selection order, ``coeffs`` the
    matching coefficients, so that ``approx == D[:, indices] @ coeffs``.
    ``exhausted`` is set when the loop stopped because no admissible atom was
    left (or the segment dimension was reached) before meeting ``tol``.
    """

    approx: np.ndarray
    indices: np.ndarray
    coeffs: np.ndarray
    residual_norm: float
    exhausted: bool = False
    residual_history: list | None = None


def oomp(f, D, tol: float, l1: int = 0, max_atoms: int | None = None,
         record: bool = False) -> PursuitResult:
    """Approximate ``f`` with few columns of the unit-norm dictionary ``D``.

    Parameters
    ----------
    f : (N,) array_like
        Signal segment.
    D : (N, M) array_like
        Dictionary with unit-norm columns.
    tol : float
        Stop as soon as the residual norm is ``<= tol``.
    l1 : int
        Column selected unconditionally as the first atom.
    max_atoms : int, optional
        Upper bound on the number of atoms; defaults to ``N``.
    record : bool
        Keep the residual norm after each step in ``residual_history``.
    """
    f = np.asarray(f, dtype=float)
    D = np.asarray(D, dtype=float)
    if f.ndim != 1 or D.ndim != 2 or D.shape[0] != f.shape[0]:
        raise ValueError(f"dimension mismatch: signal {f.shape}, dictionary {D.shape}")
    if tol < 0:
        raise ValueError(f"tol must be nonnegative, got {tol}")
    N, M = D.shape
    if not 0 <= l1 < M:
        raise ValueError(f"initial atom index {l1} out of range for {M} columns")
    kmax = N if max_atoms is None else min(N, max_atoms)

    fnorm = float(np.linalg.norm(f))
    if fnorm == 0.0:
        return PursuitResult(np.zeros(N), np.zeros(0, dtype=int), np.zeros(0), 0.0,
                             residual_history=[] if record else None)

    Q = np.zeros((N, kmax))       # orthonormal basis of the selected span
    R = np.zeros((kmax, kmax))    # D[:, chosen] = Q @ R
    W = D.copy()                  # out-of-span components of every column
    admissible = np.ones(M, dtype=bool)
    chosen: list[int] = []
    r = f.copy()
    history = []
    exhausted = False

    n = l1
    while True:
        k = len(chosen)
        d = D[:, n]
        # two-pass classical Gram-Schmidt against the current basis
        proj = Q[:, :k].T @ d
        w = d - Q[:, :k] @ proj
        corr = Q[:, :k].T @ w
        w -= Q[:, :k] @ corr
        proj += corr
        wn = float(np.linalg.norm(w))
        q = w / wn
        Q[:, k] = q
        R[:k, k] = proj
        R[k, k] = wn
        chosen.append(n)
        admissible[n] = False

        r -= q * (q @ r)
        rn = float(np.linalg.norm(r))
        if record:
            history.append(rn)
        if rn <= tol:
            break
        if len(chosen) >= kmax:
            exhausted = True
            break

        W -= np.outer(q, q @ W)
        res2 = np.einsum("ij,ij->j", W, W)
        admissible &= res2 > DEPENDENCE_TOL**2
        if not admissible.any():
            exhausted = True
            break
        crit = np.full(M, -np.inf)
        crit[admissible] = (r @ W)[admissible] ** 2 / res2[admissible]
        best = crit.max()
        n = int(np.flatnonzero(crit >= best - TIE_RTOL * fnorm**2)[0])

    k = len(chosen)
    coeffs = solve_triangular(R[:k, :k], Q[:, :k].T @ f)
    indices = np.array(chosen, dtype=int)
    approx = D[:, indices] @ coeffs
    return PursuitResult(approx, indices, coeffs, float(np.linalg.norm(f - approx)),
                         exhausted=exhausted, residual_history=history if record else None)
