"""Reading ECG records and writing model/reconstruction/plot files."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

BITS = 11


@dataclass
class RawRecord:
    samples: np.ndarray
    source: str

    @property
    def sample_count(self) -> int:
        return len(self.samples)


def unpack_ubit(data: bytes, bits: int = BITS, msb_first: bool = False) -> np.ndarray:
    """Split a byte string into unsigned ``bits``-wide integers.

    The bit stream takes each byte least-significant bit first and the first
    bit of every group is the sample's least significant bit. Trailing bits
    that do not fill a whole sample are dropped. ``msb_first=True`` reads
    both bytes and samples most-significant bit first instead.
    """
    order = "big" if msb_first else "little"
    stream = np.unpackbits(np.frombuffer(data, dtype=np.uint8), bitorder=order)
    n = len(stream) // bits
    groups = stream[:n * bits].reshape(n, bits).astype(np.int64)
    weights = 1 << np.arange(bits, dtype=np.int64)
    if msb_first:
        weights = weights[::-1]
    return groups @ weights


def pack_ubit(samples, bits: int = BITS, msb_first: bool = False) -> bytes:
    """Inverse of :func:`unpack_ubit`; the last byte is zero-padded."""
    samples = np.asarray(samples, dtype=np.int64)
    if samples.size and (samples.min() < 0 or samples.max() >= 1 << bits):
        raise ValueError(f"samples must lie in [0, {(1 << bits) - 1}]")
    shifts = np.arange(bits, dtype=np.int64)
    if msb_first:
        shifts = shifts[::-1]
    stream = ((samples[:, None] >> shifts[None, :]) & 1).astype(np.uint8).ravel()
    order = "big" if msb_first else "little"
    return np.packbits(stream, bitorder=order).tobytes()


def read_ubit11(path, msb_first: bool = False) -> RawRecord:
    """Read a record stored as packed 11-bit unsigned samples."""
    data = Path(path).read_bytes()
    return RawRecord(unpack_ubit(data, BITS, msb_first), str(path))


def read_csv(path) -> np.ndarray:
    """Read numbers separated by newlines and/or commas."""
    values = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            for tok in line.split(","):
                tok = tok.strip()
                if not tok:
                    continue
                try:
                    values.append(float(tok))
                except ValueError:
                    raise ValueError(f"{path}:{lineno}: not a number: {tok!r}") from None
    return np.array(values, dtype=float)


def read_signal(path, fmt: str | None = None, msb_first: bool = False) -> np.ndarray:
    """Dispatch on ``fmt`` ('ubit11' or 'csv'); guessed from the suffix if omitted."""
    if fmt is None:
        fmt = "ubit11" if Path(path).suffix.lower() == ".dat" else "csv"
    if fmt == "ubit11":
        return read_ubit11(path, msb_first).samples.astype(float)
    if fmt == "csv":
        return read_csv(path)
    raise ValueError(f"unknown input format {fmt!r}")


def _num(x) -> str:
    return format(float(x), ".17g")


def _json_num(x):
    x = float(x)
    return x if np.isfinite(x) else None


def write_outputs(result, out_dir, overlay_len: int = 2000) -> dict:
    """Write ``model.jsonl``, ``reconstruction.csv``, ``overlay.csv`` and ``sparsity.csv``.

    Returns a mapping of output kind to path.
    """
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create output directory {out}: {exc}") from exc

    paths = {name: out / fname for name, fname in (
        ("model", "model.jsonl"), ("reconstruction", "reconstruction.csv"),
        ("overlay", "overlay.csv"), ("sparsity", "sparsity.csv"))}
    cfg = result.config
    header = {"family": cfg.get("family"), "N_b": cfg.get("N_b", result.N_b),
              "j": cfg.get("j"), "b": cfg.get("b"), "M_c": cfg.get("M_c"),
              "prd0": cfg.get("prd0"), "Q": result.Q, "K": result.K,
              "PRD": _json_num(result.PRD), "SR": _json_num(result.SR)}
    try:
        with open(paths["model"], "w", encoding="utf-8", newline="\n") as fh:
            fh.write(json.dumps(header) + "\n")
            for q, m in enumerate(result.segment_models):
                rec = {"q": q, "k": m.k, "indices": [int(i) for i in m.atom_indices],
                       "coeffs": [float(c) for c in m.coeffs], "prd": float(m.prd),
                       "sr": _json_num(m.sr)}
                if m.k == 0:
                    rec["empty"] = True
                fh.write(json.dumps(rec) + "\n")

        with open(paths["reconstruction"], "w", encoding="utf-8", newline="\n") as fh:
            fh.writelines(_num(v) + "\n" for v in result.reconstruction)

        f, fr = result.signal, result.reconstruction
        n = min(overlay_len, len(f))
        with open(paths["overlay"], "w", encoding="utf-8", newline="\n") as fh:
            fh.write("n,signal,approximation,error\n")
            for i in range(n):
                fh.write(f"{i},{_num(f[i])},{_num(fr[i])},{_num(f[i] - fr[i])}\n")

        with open(paths["sparsity"], "w", encoding="utf-8", newline="\n") as fh:
            fh.write("q,k,inv_sr,prd\n")
            for q, m in enumerate(result.segment_models):
                fh.write(f"{q},{m.k},{_num(m.k / result.N_b)},{_num(m.prd)}\n")
    except OSError as exc:
        raise OSError(f"writing outputs to {out}: {exc}") from exc
    return {k: os.fspath(v) for k, v in paths.items()}
