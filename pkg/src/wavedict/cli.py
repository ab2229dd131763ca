"""Command-line interface: ``wavedict {families,gen,dict,approx}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__
from .cascade import wavelet_gen
from .dictionary import full_dictionary, gen_dict
from .ecgio import read_signal, write_outputs
from .filters import DESCRIPTIONS, FAMILIES, filters
from .model import match_prd, signal_model

log = logging.getLogger("wavedict")


def parse_levels(text: str) -> list[int]:
    """``"3:7"`` (inclusive range) or ``"2,3,5"``."""
    text = text.strip()
    try:
        if ":" in text:
            lo, hi = (int(p) for p in text.split(":"))
            return list(range(lo, hi + 1))
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad level specification {text!r}") from None


def parse_b(text: str) -> float:
    """Decimal (``0.25``) or fraction (``1/4``)."""
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad translation factor {text!r}") from None


def _fmt(v) -> str:
    return format(float(v), ".17g")


def cmd_families(args) -> int:
    if args.name is None:
        for name in FAMILIES:
            pair, _ = filters(name)
            print(f"{name:8s} len(h)={len(pair.h):2d} len(g)={len(pair.g):2d}  {DESCRIPTIONS[name]}")
        return 0
    pair, ok = filters(args.name)
    if not ok:
        print(f"error: wrong name of a wavelet family: {args.name!r}", file=sys.stderr)
        return 2
    print("h = " + " ".join(_fmt(v) for v in pair.h))
    print("g = " + " ".join(_fmt(v) for v in pair.g))
    return 0


def cmd_gen(args) -> int:
    pair, ok = filters(args.name)
    if not ok:
        print(f"error: wrong name of a wavelet family: {args.name!r}", file=sys.stderr)
        return 2
    gen = wavelet_gen(pair.h, pair.g, args.level)
    out = open(args.output, "w", encoding="utf-8", newline="\n") if args.output else sys.stdout
    try:
        out.write("x,phi,psi\n")
        for m in range(max(len(gen.phi), len(gen.psi))):
            phi = _fmt(gen.phi[m]) if m < len(gen.phi) else ""
            psi = _fmt(gen.psi[m]) if m < len(gen.psi) else ""
            out.write(f"{_fmt(m / 2**gen.u)},{phi},{psi}\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_dict(args) -> int:
    wd = gen_dict(args.name, (args.nb, args.levels, args.b))
    print(f"{wd.matrix.shape[0]} x {wd.matrix.shape[1]}")
    print("ind = [" + ", ".join(str(int(n)) for n in wd.ind) + "]")
    if wd.removed:
        print(f"removed near-zero columns: {wd.removed}")
    if args.output:
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        with open(out / "descriptors.jsonl", "w", encoding="utf-8", newline="\n") as fh:
            for i, c in enumerate(wd.col):
                fh.write(json.dumps({"index": i, **c.as_dict()}) + "\n")
        (out / "ind.json").write_text(json.dumps([int(n) for n in wd.ind]) + "\n", encoding="utf-8")
        if args.matrix:
            np.savetxt(out / "matrix.csv", wd.matrix, delimiter=",", fmt="%.17g")
    return 0


def cmd_approx(args) -> int:
    f = read_signal(args.input, args.format, msb_first=args.msb_first)
    levels = list(args.levels)
    b = args.b
    if args.basis:
        b = 1.0
        levels = levels + [max(levels) + 1]
    pars = (args.nb, levels, b)
    if args.target_prd is not None:
        res = match_prd(f, args.nb, args.target_prd, args.name, pars, args.mc, threads=args.threads)
    else:
        d = full_dictionary(args.name, args.nb, levels, b, args.mc)
        res = signal_model(f, args.nb, args.prd0, args.name, pars, args.mc,
                           threads=args.threads, dictionary=d)
    print(f"family={args.name} N_b={args.nb} j={levels} b={b} M_c={args.mc} prd0={res.config['prd0']:.6g}")
    print(f"Q={res.Q} K={res.K} PRD={res.PRD:.4f} SR={res.SR:.4f}")
    if args.output:
        write_outputs(res, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wavedict", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("families", help="list wavelet families or print one filter pair")
    s.add_argument("--name")
    s.set_defaults(func=cmd_families)

    s = sub.add_parser("gen", help="dump sampled phi/psi as CSV")
    s.add_argument("--name", required=True)
    s.add_argument("--level", "-u", type=int, default=6)
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_gen)

    def dict_args(s, nb, levels, b):
        s.add_argument("--name", default="CDF97")
        s.add_argument("--nb", type=int, default=nb, help="segment length N_b")
        s.add_argument("--levels", "-j", type=parse_levels, default=parse_levels(levels))
        s.add_argument("-b", type=parse_b, default=parse_b(b), help="translation factor 2^-m")

    s = sub.add_parser("dict", help="build a normalized wavelet dictionary")
    dict_args(s, 500, "3:7", "1/4")
    s.add_argument("--output", "-o", help="directory for descriptors.jsonl / ind.json")
    s.add_argument("--matrix", action="store_true", help="also write matrix.csv")
    s.set_defaults(func=cmd_dict)

    s = sub.add_parser("approx", help="sparse model of an ECG record")
    s.add_argument("input")
    s.add_argument("--format", choices=("ubit11", "csv"))
    s.add_argument("--msb-first", action="store_true", help="bit order for ubit11 input")
    dict_args(s, 500, "3:7", "1/4")
    s.add_argument("--mc", type=int, default=10, help="number of cosine atoms")
    s.add_argument("--prd0", type=float, default=0.53)
    s.add_argument("--target-prd", type=float,
                   help="calibrate prd0 so the global PRD hits this value")
    s.add_argument("--basis", action="store_true",
                   help="use b=1 and one extra level (wavelet basis)")
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_approx)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
