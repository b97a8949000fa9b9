#!/usr/bin/env python3
"""3-AP ratio grids (left and right panels) as CSV and SVG under results/.

The right panel includes N = 10000 and takes a few minutes on one core.

Usage: python3 scripts/run_figure2.py [jobs]
"""
import sys
from pathlib import Path

from pslab import experiments


def main():
    jobs = experiments.resolve_jobs(int(sys.argv[1]) if len(sys.argv) > 1 else None)
    out = Path("results")
    out.mkdir(exist_ok=True)
    panels = {
        "left": (experiments.FIG1_ALPHAS, experiments.FIG1_N),
        "right": (experiments.FIG2_RIGHT_ALPHAS, experiments.FIG2_RIGHT_N),
    }
    for name, (alphas, Ns) in panels.items():
        rows = experiments.figure2(alphas, Ns, jobs=jobs)
        experiments.emit_csv(rows, out / f"figure2_{name}.csv")
        experiments.emit_svg(rows, out / f"figure2_{name}.svg", f"3-AP counts, {name} panel")
        lo = min(r.ratio for r in rows)
        hi = max(r.ratio for r in rows)
        print(f"{name}: {len(rows)} rows, ratios in [{lo:.3f}, {hi:.3f}]")


if __name__ == "__main__":
    main()
