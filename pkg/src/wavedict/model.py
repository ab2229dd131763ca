"""Piecewise sparse model of a signal: partition, per-segment OOMP, metrics."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .dictionary import FullDictionary, full_dictionary
from .pursuit import oomp

log = logging.getLogger(__name__)


@dataclass
class Partition:
    segments: list
    Q: int
    truncated_signal: np.ndarray


@dataclass
class SegmentModel:
    """Atomic decomposition of one segment; ``sr`` is ``inf`` for an empty segment."""

    approx: np.ndarray
    atom_indices: np.ndarray
    coeffs: np.ndarray
    prd: float
    sr: float
    exhausted: bool = False

    @property
    def k(self) -> int:
        return len(self.atom_indices)


@dataclass
class SignalModelResult:
    reconstruction: np.ndarray
    segment_models: list
    PRD: float
    SR: float
    signal: np.ndarray = field(repr=False)
    N_b: int = 0
    config: dict = field(default_factory=dict)

    @property
    def Q(self) -> int:
        return len(self.segment_models)

    @property
    def K(self) -> int:
        return sum(m.k for m in self.segment_models)

    @property
    def prd(self) -> np.ndarray:
        return np.array([m.prd for m in self.segment_models])

    @property
    def sr(self) -> np.ndarray:
        return np.array([m.sr for m in self.segment_models])


def partition(f, N_b: int) -> Partition:
    """Split ``f`` into ``floor(len(f) / N_b)`` consecutive segments; drop the tail."""
    f = np.asarray(f, dtype=float).ravel()
    if N_b < 1:
        raise ValueError(f"segment length must be positive, got {N_b}")
    Q = len(f) // N_b
    if Q == 0:
        raise ValueError(f"signal of length {len(f)} is shorter than one segment (N_b={N_b})")
    f = f[:Q * N_b].copy()
    return Partition(segments=list(f.reshape(Q, N_b)), Q=Q, truncated_signal=f)


def metrics(f, fr, k, N_b: int):
    """Local/global PRD (percent) and sparsity ratios.

    Returns ``(prd, sr, PRD, SR)``. Segments with zero energy get ``prd = 0``;
    segments with ``k = 0`` get ``sr = inf``.
    """
    f = np.asarray(f, dtype=float)
    fr = np.asarray(fr, dtype=float)
    k = np.asarray(k, dtype=int)
    if f.shape != fr.shape or len(f) != len(k) * N_b:
        raise ValueError("inconsistent lengths of signal, reconstruction and atom counts")
    fnorm = np.linalg.norm(f)
    if fnorm == 0:
        raise ValueError("PRD is undefined for a zero signal")
    seg = f.reshape(-1, N_b)
    err = np.linalg.norm(seg - fr.reshape(-1, N_b), axis=1)
    den = np.linalg.norm(seg, axis=1)
    prd = np.zeros(len(k))
    nz = den > 0
    prd[nz] = 100.0 * err[nz] / den[nz]
    with np.errstate(divide="ignore"):
        sr = np.where(k > 0, N_b / np.maximum(k, 1), np.inf)
    K = int(k.sum())
    SR = len(f) / K if K > 0 else np.inf
    return prd, sr, float(100.0 * np.linalg.norm(f - fr) / fnorm), SR


def _approximate(segment, D, prd0):
    fnorm = np.linalg.norm(segment)
    res = oomp(segment, D, prd0 * fnorm / 100.0, 0)
    prd = 100.0 * np.linalg.norm(segment - res.approx) / fnorm if fnorm > 0 else 0.0
    sr = len(segment) / len(res.indices) if len(res.indices) else np.inf
    return SegmentModel(res.approx, res.indices, res.coeffs, float(prd), float(sr), res.exhausted)


def signal_model(f, N_b: int, prd0: float, namef: str, pars, M_c: int,
                 threads: int = 1, dictionary: FullDictionary | None = None) -> SignalModelResult:
    """Approximate every segment of ``f`` with OOMP over ``[D^C D^W]``.

    ``pars`` is ``(N_b, j, b)`` as for :func:`~wavedict.dictionary.gen_dict`.
    The stopping tolerance of segment ``q`` is ``prd0 * ||f_q|| / 100``; the
    first (DC cosine) atom is always taken first.
    """
    if prd0 <= 0:
        raise ValueError(f"prd0 must be positive, got {prd0}")
    N_b_pars, j, b = pars
    if N_b_pars != N_b:
        raise ValueError(f"segment length {N_b} differs from dictionary length {N_b_pars}")
    part = partition(f, N_b)
    if dictionary is None:
        dictionary = full_dictionary(namef, N_b, j, b, M_c)
    D = dictionary.matrix
    if D.shape[1] == 0:
        raise ValueError("empty dictionary")

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            models = list(pool.map(lambda s: _approximate(s, D, prd0), part.segments))
    else:
        models = [_approximate(s, D, prd0) for s in part.segments]

    n_exh = sum(m.exhausted for m in models)
    if n_exh:
        log.warning("%d segment(s) ran out of admissible atoms before reaching tol", n_exh)
    fr = np.concatenate([m.approx for m in models])
    _, _, PRD, SR = metrics(part.truncated_signal, fr, [m.k for m in models], N_b)
    config = {"family": namef, "N_b": int(N_b), "j": [int(x) for x in np.atleast_1d(j)],
              "b": float(b), "M_c": int(M_c), "prd0": float(prd0)}
    return SignalModelResult(reconstruction=fr, segment_models=models, PRD=PRD, SR=SR,
                             signal=part.truncated_signal, N_b=int(N_b), config=config)


def match_prd(f, N_b: int, target: float, namef: str, pars, M_c: int,
              atol: float = 0.005, max_iter: int = 30, threads: int = 1) -> SignalModelResult:
    """Bisect ``prd0`` until the global PRD is within ``atol`` of ``target``.

    PRD grows (stepwise) with ``prd0``; if the bracket cannot be narrowed
    further, the run closest to ``target`` is returned.
    """
    dictionary = full_dictionary(namef, N_b, pars[1], pars[2], M_c)

    def run(p0):
        return signal_model(f, N_b, p0, namef, pars, M_c, threads=threads, dictionary=dictionary)

    lo, hi = 0.5 * target, 2.0 * target
    best = run(target)
    if abs(best.PRD - target) <= atol:
        return best
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        res = run(mid)
        if abs(res.PRD - target) < abs(best.PRD - target):
            best = res
        if abs(res.PRD - target) <= atol:
            break
        if res.PRD < target:
            lo = mid
        else:
            hi = mid
    return best
