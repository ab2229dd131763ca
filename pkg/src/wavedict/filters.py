"""Scaling/wavelet filter catalog for the supported wavelet families.

Every filter is stored as it appears in the reference tables: the scaling
filter ``h`` is *not* normalized here. Use :func:`normalize_scaling_filter`
(or let the cascade do it) to bring ``sum(h)`` to 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

FAMILIES = (
    "CW2", "CW3", "CW4", "CDF97", "CDF97d", "CDF53",
    "Short4", "Short3", "Short2", "Db3", "Db4", "Db5",
    "Sym3", "Sym4", "Sym5", "Coif26", "Coif38",
)

DESCRIPTIONS = {
    "CW2": "Chui-Wang linear spline wavelet",
    "CW3": "Chui-Wang quadratic spline wavelet",
    "CW4": "Chui-Wang cubic spline wavelet",
    "CDF97": "primal CDF 9/7 wavelet",
    "CDF97d": "dual CDF 9/7 wavelet",
    "CDF53": "primal CDF 5/3 wavelet",
    "Short4": "cubic spline wavelet, short support, 4 vanishing moments",
    "Short3": "quadratic spline wavelet, short support, 3 vanishing moments",
    "Short2": "linear spline wavelet, short support, 2 vanishing moments",
    "Db3": "Daubechies wavelet, 3 vanishing moments",
    "Db4": "Daubechies wavelet, 4 vanishing moments",
    "Db5": "Daubechies wavelet, 5 vanishing moments",
    "Sym3": "symlet, 3 vanishing moments",
    "Sym4": "symlet, 4 vanishing moments",
    "Sym5": "symlet, 5 vanishing moments",
    "Coif26": "coiflet, 2 vanishing moments, support length 6",
    "Coif38": "coiflet, 3 vanishing moments, support length 8",
}

# number of vanishing moments of the wavelet generated by g
VANISHING_MOMENTS = {
    "CW2": 2, "CW3": 3, "CW4": 4,
    "CDF97": 4, "CDF97d": 4, "CDF53": 2,
    "Short2": 2, "Short3": 3, "Short4": 4,
    "Db3": 3, "Db4": 4, "Db5": 5,
    "Sym3": 3, "Sym4": 4, "Sym5": 5,
    "Coif26": 2, "Coif38": 3,
}

ORTHONORMAL = ("Db3", "Db4", "Db5", "Sym3", "Sym4", "Sym5", "Coif26", "Coif38")
SPLINE = ("CW2", "CW3", "CW4", "CDF53", "Short2", "Short3", "Short4")


@dataclass(frozen=True)
class FilterPair:
    """Scaling filter ``h`` and wavelet filter ``g`` of one family."""

    name: str
    h: np.ndarray
    g: np.ndarray

    @property
    def K(self) -> int:
        """Support length of the scaling function."""
        return len(self.h) - 1

    @property
    def M(self) -> int:
        return len(self.g) - 1

    @property
    def s(self) -> int:
        """Support length of the wavelet, ``(K + M) / 2``."""
        # K + M is even for every catalogued family
        return (self.K + self.M) // 2


_DB3_H = [0.035226291882101, -0.085441273882241, -0.135011020010391,
          0.459877502119331, 0.806891509313339, 0.332670552950957]
_DB3_G = [-0.332670552950957, 0.806891509313339, -0.459877502119331,
          -0.135011020010391, 0.085441273882241, 0.035226291882101]
_R15 = sqrt(15.0)
_R7 = sqrt(7.0)


def _table(name):
    # (h, g) as plain lists, or None for unknown names
    if name == "CW2":
        return [1 / 2, 1, 1 / 2], [c / 12 for c in (1, -6, 10, -6, 1)]
    if name == "CW3":
        return ([1 / 4, 3 / 4, 3 / 4, 1 / 4],
                [c / 480 for c in (1, -29, 147, -303, 303, -147, 29, -1)])
    if name == "CW4":
        return ([1 / 8, 1 / 2, 3 / 4, 1 / 2, 1 / 8],
                [c / 2520 for c in (1, -124, 1677, -7904, 18482, -24264,
                                    18482, -7904, 1677, -124, 1)])
    if name == "CDF97":
        return ([-0.045635881557, -0.028771763114, 0.295635881557,
                 0.557543526229, 0.295635881557, -0.028771763114,
                 -0.045635881557],
                [0.026748757411, 0.016864118443, -0.078223266529,
                 -0.266864118443, 0.602949018236, -0.266864118443,
                 -0.078223266529, 0.016864118443, 0.026748757411])
    if name == "CDF97d":
        return ([0.026748757411, -0.016864118443, -0.078223266529,
                 0.266864118443, 0.602949018236, 0.266864118443,
                 -0.078223266529, -0.016864118443, 0.026748757411000],
                [0.045635881557, -0.028771763114, -0.295635881557,
                 0.557543526229, -0.295635881557, -0.028771763114,
                 0.045635881557])
    if name == "CDF53":
        return [1 / 2, 1, 1 / 2], [-1 / 8, -1 / 4, 3 / 4, -1 / 4, -1 / 8]
    if name == "Short4":
        return [1 / 8, 1 / 2, 3 / 4, 1 / 2, 1 / 8], [1 / 8, -1 / 2, 3 / 4, -1 / 2, 1 / 8]
    if name == "Short3":
        return [1 / 4, 3 / 4, 3 / 4, 1 / 4], [-1 / 4, 3 / 4, -3 / 4, 1 / 4]
    if name == "Short2":
        return [1 / 2, 1, 1 / 2], [-1 / 2, 1, -1 / 2]
    if name in ("Db3", "Sym3"):
        return list(_DB3_H), list(_DB3_G)
    if name == "Db4":
        h = [0.162901714025620, 0.505472857545650, 0.446100069123190,
             -0.019787513117910, -0.132253583684370, 0.021808150237390,
             0.023251800535560, -0.007493494665130]
        g = [0.162901714025620, -0.505472857545650, 0.446100069123190,
             0.019787513117910, -0.132253583684370, -0.021808150237390,
             0.023251800535560, 0.007493494665130]
        return h, [-c for c in reversed(g)]
    if name == "Db5":
        return ([0.003335725285002, -0.012580751999016, -0.006241490213012,
                 0.077571493840065, -0.032244869585030, -0.242294887066190,
                 0.138428145901103, 0.724308528438574, 0.603829269797473,
                 0.160102397974125],
                [-0.160102397974125, 0.603829269797473, -0.724308528438574,
                 0.138428145901103, 0.242294887066190, -0.032244869585030,
                 -0.077571493840065, -0.006241490213012, 0.012580751999016,
                 0.003335725285002])
    if name == "Sym4":
        h = [0.022785172948000, -0.008912350720850, -0.070158812089500,
             0.210617267102000, 0.568329121705000, 0.351869534328000,
             -0.020955482562550, -0.053574450709000]
        g = [0.022785172948000, 0.008912350720850, -0.070158812089500,
             -0.210617267102000, 0.568329121705000, -0.351869534328000,
             -0.020955482562550, 0.053574450709000]
        return h, list(reversed(g))
    if name == "Sym5":
        return ([0.027333068345078, 0.029519490925775, -0.039134249302383,
                 0.199397533977394, 0.723407690402421, 0.633978963458212,
                 0.016602105764522, -0.175328089908450, -0.021101834024759,
                 0.019538882735287],
                [-0.019538882735287, -0.021101834024759, 0.175328089908450,
                 0.016602105764522, -0.633978963458212, 0.723407690402421,
                 -0.199397533977394, -0.039134249302383, -0.029519490925775,
                 0.027333068345078])
    if name == "Coif26":
        h = [9 - _R15, 13 + _R15, 6 + 2 * _R15, 6 - 2 * _R15, 1 - _R15, -3 + _R15]
        g = [9 - _R15, -13 - _R15, 6 + 2 * _R15, -6 + 2 * _R15, 1 - _R15, 3 - _R15]
        return [c / 32 for c in h], [-c / 32 for c in reversed(g)]
    if name == "Coif38":
        h = [-1 / 32 - _R7 / 128, -3 / 128, 9 / 32 + 3 * _R7 / 128, 73 / 128,
             9 / 32 - 3 * _R7 / 128, -9 / 128, -1 / 32 + _R7 / 128, 3 / 128]
        g = [-1 / 32 - _R7 / 128, 3 / 128, 9 / 32 + 3 * _R7 / 128, -73 / 128,
             9 / 32 - 3 * _R7 / 128, 9 / 128, -1 / 32 + _R7 / 128, -3 / 128]
        return h, [-c for c in reversed(g)]
    return None


def filters(namef):
    """Look up the filter pair of a wavelet family.

    Parameters
    ----------
    namef : str
        Family name, matched case-sensitively against :data:`FAMILIES`.

    Returns
    -------
    pair : FilterPair or None
        ``None`` when the name is unknown.
    valid : bool
        ``False`` for unknown names; this function never raises on them.
    """
    entry = _table(namef) if isinstance(namef, str) else None
    if entry is None:
        return None, False
    h, g = entry
    return FilterPair(namef, np.array(h, dtype=float), np.array(g, dtype=float)), True


def get_filters(namef) -> FilterPair:
    """Like :func:`filters` but raises ``ValueError`` for unknown names."""
    pair, ok = filters(namef)
    if not ok:
        raise ValueError(f"wrong name of a wavelet family: {namef!r}")
    return pair


def normalize_scaling_filter(h) -> np.ndarray:
    """Rescale ``h`` so its entries sum to 2."""
    h = np.asarray(h, dtype=float)
    total = h.sum()
    if total == 0:
        raise ValueError("degenerate scaling filter: coefficients sum to zero")
    return 2.0 * h / total
