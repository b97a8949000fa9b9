#!/usr/bin/env python3
"""alpha = 2 counts against their x log x main terms.

Usage: python3 scripts/run_probe.py [x1,x2,...]
"""
import sys
from pathlib import Path

from pslab import experiments


def main():
    xs = [int(t) for t in sys.argv[1].split(",")] if len(sys.argv) > 1 else [1000, 2000, 5000, 10_000, 20_000]
    out = Path("results")
    out.mkdir(exist_ok=True)
    for kind in ("N3", "AP"):
        rows = experiments.pythagoras_probe(xs, kind, jobs=experiments.resolve_jobs())
        experiments.emit_csv(rows, out / f"probe_alpha2_{kind.lower()}.csv")
        for r in rows:
            print(f"{kind} x={r.N:>6} count={r.count:>8} main={r.rhs:12.1f} ratio={r.ratio:.4f}")


if __name__ == "__main__":
    main()
