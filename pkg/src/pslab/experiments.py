"""Experiment grids (ratio plots against conjectured limits) and their CSV/SVG output."""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, List, Sequence

from . import asymptotics, counting
from .errors import OutputError
from .exactfloor import parse_alpha

FIG1_ALPHAS = tuple(str(Decimal("1.90") + Decimal("0.01") * i) for i in range(21))
FIG1_N = (1000, 3000, 5000)
FIG2_RIGHT_ALPHAS = tuple(str(Decimal("1.10") + Decimal("0.05") * i) for i in range(29))
FIG2_RIGHT_N = (1000, 3000, 5000, 10_000)

PYTHAGORAS_COEF = 1.0 / math.pi
AP_SQUARES_COEF = math.sqrt(2.0) * math.log(1.0 + math.sqrt(2.0)) / math.pi**2


@dataclass(frozen=True)
class ExperimentRow:
    alpha: str
    N: int
    count: int
    rhs: float
    ratio: float


def _count(kind: str, x: int, alpha, strict_upper: bool) -> int:
    if kind == "N12":
        return counting.count_N12_value(x, alpha)
    if kind == "N3":
        return counting.count_N3_value(x, alpha, strict_upper)
    if kind == "AP":
        return counting.count_NAP_value(x, alpha, strict_upper)
    raise ValueError(f"unknown kind {kind!r}")


def _figure_point(task) -> ExperimentRow:
    kind, alpha_text, N, strict_upper = task
    alpha = parse_alpha(alpha_text)
    count = _count(kind, N, alpha, strict_upper)
    rhs = asymptotics.conjecture_rhs(kind, alpha)
    ratio = count / (rhs * N ** (3.0 - alpha.value))
    return ExperimentRow(alpha_text, N, count, rhs, ratio)


def resolve_jobs(jobs=None) -> int:
    env = os.environ.get("PSLAB_JOBS")
    if env:
        return max(1, int(env))
    if jobs is None:
        return os.cpu_count() or 1
    return max(1, int(jobs))


def _run(tasks: Sequence, fn, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, tasks))


def sort_rows(rows: Iterable[ExperimentRow]) -> List[ExperimentRow]:
    return sorted(rows, key=lambda r: (Fraction(r.alpha), r.N))


def ratio_grid(kind: str, alphas: Sequence[str], N_list: Sequence[int], jobs: int = 1,
               strict_upper: bool = False) -> List[ExperimentRow]:
    if not alphas or not N_list:
        raise ValueError("alpha grid and N list must be nonempty")
    for a in alphas:
        parse_alpha(a)
    tasks = [(kind, a, int(N), strict_upper) for a in alphas for N in N_list]
    return sort_rows(_run(tasks, _figure_point, jobs))


def figure1(alphas: Sequence[str] = FIG1_ALPHAS, N_list: Sequence[int] = FIG1_N, panel: str = "n12",
            jobs: int = 1, strict_upper: bool = False) -> List[ExperimentRow]:
    """Ratio of the triple counts to their conjectured main terms.

    ``panel="n12"`` uses the count with ``l, m <= N``; ``panel="n3"`` the one
    with ``n <= N``.
    """
    kind = {"n12": "N12", "n3": "N3"}[panel.lower()]
    return ratio_grid(kind, alphas, N_list, jobs, strict_upper)


def figure2(alphas: Sequence[str] = FIG1_ALPHAS, N_list: Sequence[int] = FIG1_N, jobs: int = 1,
            strict_upper: bool = False) -> List[ExperimentRow]:
    """Ratio of the 3-AP count to its conjectured main term.

    The defaults are the left panel; pass ``FIG2_RIGHT_ALPHAS`` and
    ``FIG2_RIGHT_N`` for the right one.
    """
    return ratio_grid("AP", alphas, N_list, jobs, strict_upper)


def _probe_point(task) -> ExperimentRow:
    kind, x, strict_upper = task
    alpha = parse_alpha("2")
    count = _count(kind, x, alpha, strict_upper)
    coef = PYTHAGORAS_COEF if kind == "N3" else AP_SQUARES_COEF
    rhs = coef * x * math.log(x)
    return ExperimentRow("2", x, count, rhs, count / rhs)


def pythagoras_probe(x_list: Sequence[int], kind: str = "N3", jobs: int = 1,
                     strict_upper: bool = False) -> List[ExperimentRow]:
    """Counts at alpha = 2 against their ``x log x`` main terms.

    Here ``rhs`` holds the main term value itself, so ``ratio = count / rhs``.
    """
    kind = kind.upper()
    if kind not in ("N3", "AP"):
        raise ValueError("kind must be N3 or AP")
    if not x_list:
        raise ValueError("x list must be nonempty")
    tasks = [(kind, int(x), strict_upper) for x in x_list]
    return sort_rows(_run(tasks, _probe_point, jobs))


def _g12(v) -> str:
    if isinstance(v, int):
        return str(v)
    return format(float(v), ".12g")


def csv_text(rows: Sequence[ExperimentRow]) -> str:
    lines = ["alpha,N,count,rhs,ratio"]
    for r in sort_rows(rows):
        lines.append(",".join([r.alpha, str(r.N), str(r.count), _g12(r.rhs), _g12(r.ratio)]))
    return "\n".join(lines) + "\n"


def emit_csv(rows: Sequence[ExperimentRow], path) -> None:
    if not rows:
        raise OutputError("refusing to write an empty CSV")
    text = csv_text(rows)
    try:
        with open(path, "w", newline="\n", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise OutputError(str(exc)) from exc


_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def svg_text(rows: Sequence[ExperimentRow], title: str = "", ylabel: str = "ratio") -> str:
    rows = sort_rows(rows)
    width, height = 640, 420
    left, right, top, bottom = 70, 130, 40, 60
    xs = [float(Fraction(r.alpha)) for r in rows]
    ys = [r.ratio for r in rows]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(min(ys), 1.0), max(max(ys), 1.0)
    if x1 == x0:
        x0, x1 = x0 - 0.5, x1 + 0.5
    pad = 0.05 * (y1 - y0 or 1.0)
    y0, y1 = y0 - pad, y1 + pad
    pw, ph = width - left - right, height - top - bottom

    def px(x):
        return left + (x - x0) / (x1 - x0) * pw

    def py(y):
        return top + (1.0 - (y - y0) / (y1 - y0)) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    for i in range(6):
        xv = x0 + (x1 - x0) * i / 5
        yv = y0 + (y1 - y0) * i / 5
        out.append(f'<text x="{px(xv):.1f}" y="{top + ph + 18}" text-anchor="middle">{xv:.3g}</text>')
        out.append(f'<text x="{left - 6}" y="{py(yv) + 4:.1f}" text-anchor="end">{yv:.3g}</text>')
    out.append(f'<line x1="{left}" y1="{py(1.0):.1f}" x2="{left + pw}" y2="{py(1.0):.1f}" '
               f'stroke="gray" stroke-dasharray="4 3"/>')
    out.append(f'<text x="{left + pw / 2}" y="{height - 15}" text-anchor="middle">alpha</text>')
    out.append(f'<text x="18" y="{top + ph / 2}" text-anchor="middle" '
               f'transform="rotate(-90 18 {top + ph / 2})">{ylabel}</text>')
    if title:
        out.append(f'<text x="{left + pw / 2}" y="22" text-anchor="middle">{title}</text>')
    for k, N in enumerate(sorted({r.N for r in rows})):
        color = _PALETTE[k % len(_PALETTE)]
        for r in rows:
            if r.N == N:
                out.append(f'<circle cx="{px(float(Fraction(r.alpha))):.1f}" cy="{py(r.ratio):.1f}" '
                           f'r="3" fill="{color}"/>')
        ly = top + 14 + 18 * k
        out.append(f'<circle cx="{left + pw + 16}" cy="{ly - 4}" r="4" fill="{color}"/>')
        out.append(f'<text x="{left + pw + 26}" y="{ly}">N = {N}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg(rows: Sequence[ExperimentRow], path, title: str = "") -> None:
    if not rows:
        raise OutputError("refusing to write an empty SVG")
    text = svg_text(rows, title)
    try:
        with open(path, "w", newline="\n", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise OutputError(str(exc)) from exc
