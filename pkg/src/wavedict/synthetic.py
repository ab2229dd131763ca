"""Deterministic ECG-like test signal in raw 11-bit ADC units.

Each beat is a sum of Gaussian bumps (P, Q, R, S, T). Every ``pvc_every``-th
beat is a wide ventricular-looking complex so that two beat morphologies are
present. Baseline wander and a little noise are added, then the trace is
rounded to integers around the mid-scale value 1024, as in MIT-BIH records.
"""

from __future__ import annotations

import numpy as np

# (offset s, width s, amplitude mV) relative to the R peak
NORMAL_BEAT = ((-0.20, 0.025, 0.15), (-0.035, 0.010, -0.12), (0.0, 0.011, 1.1),
               (0.035, 0.012, -0.25), (0.28, 0.045, 0.30))
WIDE_BEAT = ((-0.03, 0.030, -0.35), (0.04, 0.035, 1.4), (0.12, 0.040, -0.5),
             (0.34, 0.060, -0.25))


def synthetic_ecg(n: int = 10000, fs: float = 360.0, seed: int = 231,
                  gain: float = 200.0, pvc_every: int = 5, noise: float = 0.6) -> np.ndarray:
    """Return ``n`` integer-valued samples of a synthetic ECG."""
    rng = np.random.default_rng(seed)
    t = np.arange(n) / fs
    x = np.zeros(n)
    beat = 0
    tr = 0.35
    while tr < t[-1] + 1.0:
        shape = WIDE_BEAT if pvc_every and beat % pvc_every == pvc_every - 1 else NORMAL_BEAT
        for off, width, amp in shape:
            x += amp * np.exp(-0.5 * ((t - tr - off) / width) ** 2)
        tr += 0.8 + 0.05 * rng.standard_normal()
        beat += 1
    x += 0.15 * np.sin(2 * np.pi * 0.3 * t) + 0.05 * np.sin(2 * np.pi * 0.05 * t + 1.0)
    samples = 1024 + gain * x + noise * rng.standard_normal(n)
    return np.clip(np.round(samples), 0, 2047)
