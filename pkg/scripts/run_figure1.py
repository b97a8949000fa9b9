#!/usr/bin/env python3
"""Both panels of the triple-count ratio grid, as CSV and SVG under results/.

Usage: python3 scripts/run_figure1.py [jobs]
"""
import sys
from pathlib import Path

from pslab import experiments


def main():
    jobs = experiments.resolve_jobs(int(sys.argv[1]) if len(sys.argv) > 1 else None)
    out = Path("results")
    out.mkdir(exist_ok=True)
    for panel in ("n12", "n3"):
        rows = experiments.figure1(panel=panel, jobs=jobs)
        experiments.emit_csv(rows, out / f"figure1_{panel}.csv")
        experiments.emit_svg(rows, out / f"figure1_{panel}.svg", f"triple counts, panel {panel}")
        peak = max(rows, key=lambda r: r.ratio)
        print(f"{panel}: {len(rows)} rows, largest ratio {peak.ratio:.3f} at alpha={peak.alpha}, N={peak.N}")


if __name__ == "__main__":
    main()
