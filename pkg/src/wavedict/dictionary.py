"""Wavelet, cosine, and combined dictionaries on a segment of ``N_b`` samples.

Atoms are ``phi(2**j x - b k)`` and ``psi(2**j x - b k)`` sampled at
``x = l / 2**r``, ``l = 0 .. N_b - 1`` with ``r = ceil(log2(N_b - 1))``.
A translation factor ``b = 2**-r_b`` below 1 oversamples the shifts and makes
the set redundant; ``b = 1`` gives the (truncated) wavelet basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .cascade import wavelet_gen
from .filters import FAMILIES, get_filters

NORM_TOL = 1e-5

INNER, BOUNDARY = "inner", "boundary"
SCALING, WAVELET, COSINE = "scaling", "wavelet", "cosine"


@dataclass(frozen=True)
class AtomDescriptor:
    """What one dictionary column holds.

    For scaling/wavelet atoms ``(level, shift)`` identify
    ``phi(2**level x - b * shift)`` or ``psi(...)``. For cosine atoms
    ``shift`` is the frequency index (0 = DC) and ``level`` is ``None``.
    """

    level: int | None
    shift: int
    locality: str
    kind: str

    def as_dict(self) -> dict:
        return {"kind": self.kind, "level": self.level,
                "shift": self.shift, "locality": self.locality}


@dataclass
class WaveletDictionary:
    """Columns of the wavelet part of a dictionary.

    ``ind[0]`` counts scaling atoms at ``levels[0]``; ``ind[1 + l]`` counts
    wavelet atoms at ``levels[l]``. ``col`` has one descriptor per column.
    """

    matrix: np.ndarray
    ind: np.ndarray
    col: list
    levels: np.ndarray
    b: float
    name: str
    removed: int = 0

    @property
    def shape(self):
        return self.matrix.shape


@dataclass
class FullDictionary:
    """Cosine atoms followed by wavelet atoms, all unit norm."""

    matrix: np.ndarray
    descriptors: list
    n_cosine: int
    wavelet: WaveletDictionary | None = field(default=None, repr=False)

    @property
    def shape(self):
        return self.matrix.shape


def segment_level(N_b: int) -> int:
    """Smallest ``r`` with ``2**r >= N_b - 1``."""
    if N_b < 2:
        raise ValueError(f"need at least 2 points per segment, got N_b={N_b}")
    return (N_b - 2).bit_length()


def dyadic_exponent(b) -> int:
    """Return ``r_b`` with ``b == 2**-r_b``; raise for anything else."""
    if b <= 0:
        raise ValueError("I expect b>0")
    e = math.log2(1.0 / b)
    if abs(e - round(e)) > 1e-10:
        raise ValueError(f"choose b such that 1/b = 2^r for some integer r (got b={b})")
    r_b = int(round(e))
    if r_b < 0:
        raise ValueError(f"translation factor must satisfy b <= 1 (got b={b})")
    return r_b


def _ceil_log2(x: Fraction) -> int:
    # smallest integer j with 2**j >= x, x > 0
    j = math.ceil(math.log2(x))
    while Fraction(2) ** j < x:
        j += 1
    while Fraction(2) ** (j - 1) >= x:
        j -= 1
    return j


def _place(D, col_index, gen, offset, N_b):
    # copy gen into column so that gen[0] lands on row `offset`, clipping at both ends
    lo = max(0, offset)
    hi = min(N_b, offset + len(gen))
    D[lo:hi, col_index] = gen[lo - offset:hi - offset]
    return offset >= 0 and offset + len(gen) <= N_b


def _fill_level(D, col, start, gen, support, level, r, r_b, a, count, kind, N_b):
    step = 2 ** (r - level - r_b)  # rows between consecutive shifts
    n1 = support * a - 1
    for i in range(count):
        shift = i - n1
        inner = _place(D, start + i, gen, shift * step, N_b)
        col.append(AtomDescriptor(level, shift, INNER if inner else BOUNDARY, kind))


def wavelet_dict(namef: str, N_b: int, j, b) -> WaveletDictionary:
    """Build the un-normalized wavelet dictionary.

    Levels below the coarsest level holding an inner wavelet are dropped
    silently. Raises ``ValueError`` when no level is left or when ``N_b`` is
    too small for the finest level and ``b``.
    """
    fp = get_filters(namef)
    N_b = int(N_b)
    r_b = dyadic_exponent(b)
    a = 2**r_b
    K, s = fp.K, fp.s
    r = segment_level(N_b)

    j_min = _ceil_log2(Fraction(s * 2**r, N_b - 1))
    levels = np.unique(np.asarray(j, dtype=int).ravel())
    levels = levels[levels >= j_min]
    if levels.size == 0:
        raise ValueError("no inner functions for these values of levels j, increase j")
    if r < levels.max() + r_b:
        raise ValueError("small number of points N_b for these values of j and b")

    def count(support, level):
        # support*a - 1 + ceil((N_b - 1) * 2**(level - r) / b)
        return support * a - 1 + -(-(N_b - 1) * a // 2 ** (r - level))

    ind = np.array([count(K, levels[0])] + [count(s, lv) for lv in levels], dtype=int)
    for lv, n in zip(levels, ind[1:]):
        # closed form used for the wavelet loop bounds must agree with ind
        L = Fraction(N_b - 1, 2 ** (r - int(lv)))
        k1 = math.floor((L - s) * a)
        k2 = math.ceil(L * a - 1)
        assert s * a - 1 + (k2 - k1) + k1 + 1 == n

    gen = wavelet_gen(fp.h, fp.g, r - int(levels[0]))
    D = np.zeros((N_b, int(ind.sum())), order="F")
    col: list = []
    _fill_level(D, col, 0, gen.phi, K, int(levels[0]), r, r_b, a, int(ind[0]), SCALING, N_b)
    start = int(ind[0])
    psi = gen.psi
    prev = int(levels[0])
    for lv, n in zip(levels, ind[1:]):
        lv = int(lv)
        psi = psi[:: 2 ** (lv - prev)]
        prev = lv
        _fill_level(D, col, start, psi, s, lv, r, r_b, a, int(n), WAVELET, N_b)
        start += int(n)
    return WaveletDictionary(matrix=D, ind=ind, col=col, levels=levels, b=float(b), name=namef)


def norm_dict(D, delta: float = 1.0, tol: float = NORM_TOL, return_mask: bool = False):
    """Scale every column to norm ``1/sqrt(delta)``; drop near-zero columns.

    Columns whose ``sqrt(delta)``-scaled norm is ``<= tol`` are removed. With
    ``return_mask=True`` the boolean mask of kept columns is returned too.
    """
    D = np.asarray(D, dtype=float)
    if D.ndim != 2:
        raise ValueError("dictionary must be a 2-D array")
    nor = math.sqrt(delta) * np.linalg.norm(D, axis=0)
    keep = nor > tol
    out = D[:, keep] / nor[keep]
    return (out, keep) if return_mask else out


def dcos(N_b: int, M_c: int) -> np.ndarray:
    """First ``M_c`` discrete cosine vectors of length ``N_b``, unit norm."""
    if M_c < 0 or M_c > N_b:
        raise ValueError(f"need 0 <= M_c <= N_b, got M_c={M_c}, N_b={N_b}")
    k = np.arange(1, N_b + 1)[:, None]
    n = np.arange(1, M_c + 1)[None, :]
    return norm_dict(np.cos(np.pi * (2 * k - 1) * (n - 1) / (2 * N_b)), 1.0)


def gen_dict(namef, pars) -> WaveletDictionary:
    """Validate parameters, build, and normalize a wavelet dictionary.

    ``pars`` is ``(N_b, j, b)``. Columns removed by normalization take their
    descriptors with them; ``ind`` is decremented accordingly and ``removed``
    holds the number of dropped columns.
    """
    if not isinstance(namef, str):
        raise TypeError("Name must be a string")
    if len(pars) != 3:
        raise ValueError("pars must be (N_b, j, b)")
    N_b, j, b = pars
    j = np.sort(np.atleast_1d(np.asarray(j, dtype=int)))
    dyadic_exponent(b)
    if namef not in FAMILIES:
        raise ValueError(f"Unknown name of a wavelet family: {namef!r}")
    wd = wavelet_dict(namef, N_b, j, b)
    D, keep = norm_dict(wd.matrix, 1.0, return_mask=True)
    if not keep.all():
        group = np.repeat(np.arange(len(wd.ind)), wd.ind)
        wd.ind = wd.ind - np.bincount(group[~keep], minlength=len(wd.ind))
        wd.col = [c for c, k in zip(wd.col, keep) if k]
        wd.removed = int((~keep).sum())
    wd.matrix = np.asfortranarray(D)
    return wd


def full_dictionary(namef, N_b: int, j, b, M_c: int) -> FullDictionary:
    """``[D^C D^W]``: ``M_c`` cosine atoms first, then the wavelet atoms."""
    wd = gen_dict(namef, (N_b, j, b))
    C = dcos(N_b, M_c)
    cos_desc = [AtomDescriptor(None, n, INNER, COSINE) for n in range(C.shape[1])]
    return FullDictionary(matrix=np.asfortranarray(np.hstack([C, wd.matrix])),
                          descriptors=cos_desc + list(wd.col),
                          n_cosine=C.shape[1], wavelet=wd)
