"""Counting additive representations and triples in Piatetski-Shapiro sequences.

All counts are exact. Fast paths look sums up in a sorted int64 table of
exact PS values (``exactfloor.ps_table``), which is equivalent to calling
``is_ps_member`` on each sum but vectorises. The brute-force oracles rebuild
their values through the pure big-integer path and never test membership.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from . import asymptotics
from .config import LIMITS
from .errors import CapExceeded, DomainError
from .exactfloor import RationalExponent, floor_pow_exact, ps_table, ps_table_upto


@dataclass(frozen=True)
class CountRecord:
    kind: str
    parameter: int
    alphas: Tuple[RationalExponent, ...]
    count: int
    leading: float
    ratio: float


def _record(kind, parameter, alphas, count, leading) -> CountRecord:
    ratio = count / leading if leading > 0 else math.nan
    return CountRecord(kind, parameter, tuple(alphas), int(count), leading, ratio)


def _r_exponent(alpha1: RationalExponent, alpha2: RationalExponent) -> float:
    return 1.0 / alpha1.value + 1.0 / alpha2.value - 1.0


def count_R_value(N: int, alpha1: RationalExponent, alpha2: RationalExponent) -> int:
    """Number of ordered (n1, n2) with ``floor(n1**a1) + floor(n2**a2) == N``."""
    if N < 2:
        return 0
    t1 = ps_table_upto(alpha1, N - 1)
    v1 = t1.values[t1.values <= N - 1]
    t2 = ps_table_upto(alpha2, N - 1)
    return int(np.count_nonzero(t2.contains(N - v1)))


def count_R(N: int, alpha1: RationalExponent, alpha2: RationalExponent) -> CountRecord:
    if N < 2:
        raise ValueError("N must be at least 2")
    count = count_R_value(N, alpha1, alpha2)
    leading = asymptotics.leading_constant_R(alpha1, alpha2) * N ** _r_exponent(alpha1, alpha2)
    return _record("R", N, (alpha1, alpha2), count, leading)


def _exact_values_upto(alpha: RationalExponent, limit: int) -> np.ndarray:
    out = []
    n = 1
    while True:
        v = floor_pow_exact(n, alpha)
        if v > limit:
            break
        out.append(v)
        n += 1
    return np.array(out, dtype=np.int64)


def count_R_bruteforce(N: int, alpha1: RationalExponent, alpha2: RationalExponent) -> int:
    """Oracle: every pair (n1, n2) with both floor powers below N, summed and compared."""
    if N > LIMITS.bruteforce_cap:
        raise CapExceeded(f"N = {N} above brute-force cap {LIMITS.bruteforce_cap}")
    if N < 2:
        return 0
    v1 = _exact_values_upto(alpha1, N - 1)
    v2 = _exact_values_upto(alpha2, N - 1)
    return int(np.count_nonzero(v1[:, None] + v2[None, :] == N))


def count_R_bruteforce_table(N_max: int, alpha1: RationalExponent, alpha2: RationalExponent) -> np.ndarray:
    """Oracle for a whole range: ``out[N]`` is the representation count of N for ``N <= N_max``."""
    if N_max > LIMITS.bruteforce_cap:
        raise CapExceeded(f"N_max = {N_max} above brute-force cap {LIMITS.bruteforce_cap}")
    v1 = _exact_values_upto(alpha1, N_max)
    v2 = _exact_values_upto(alpha2, N_max)
    sums = (v1[:, None] + v2[None, :]).ravel()
    sums = sums[sums <= N_max]
    return np.bincount(sums, minlength=N_max + 1)


def _leading_or_nan(kind: str, alpha: RationalExponent, x: int) -> float:
    try:
        rhs = asymptotics.conjecture_rhs(kind, alpha)
    except DomainError:
        return math.nan
    return rhs * x ** (3.0 - alpha.value)


def count_N3_value(x: int, alpha: RationalExponent, strict_upper: bool = False) -> int:
    """Ordered (l, m, n) with ``floor(l^a) + floor(m^a) == floor(n^a)`` and ``n <= x``.

    With ``strict_upper`` the bound is ``n < x``.
    """
    n_top = x - 1 if strict_upper else x
    if n_top < 2:
        return 0
    vals = ps_table(alpha, n_top).values
    target = int(vals[-1])
    table = ps_table(alpha, n_top)
    total = 0
    for i in range(n_top):
        vl = vals[i]
        if 2 * vl > target:
            break
        # m >= l with vl + vm <= target
        j = int(np.searchsorted(vals, target - vl, side="right"))
        s = vl + vals[i:j]
        hits = table.contains(s)
        total += 2 * int(np.count_nonzero(hits)) - int(hits[0])
    return total


def count_N3(x: int, alpha: RationalExponent, strict_upper: bool = False) -> CountRecord:
    if x < 2:
        raise ValueError("x must be at least 2")
    count = count_N3_value(x, alpha, strict_upper)
    return _record("N3", x, (alpha,), count, _leading_or_nan("N3", alpha, x))


def count_N12_value(x: int, alpha: RationalExponent) -> int:
    """Ordered (l, m, n) with ``l, m <= x`` and ``floor(l^a) + floor(m^a) == floor(n^a)``."""
    vals = ps_table(alpha, x).values
    table = ps_table_upto(alpha, 2 * int(vals[-1]))
    total = 0
    for i in range(x):
        s = vals[i] + vals[i:]
        hits = table.contains(s)
        total += 2 * int(np.count_nonzero(hits)) - int(hits[0])
    return total


def count_N12(x: int, alpha: RationalExponent) -> CountRecord:
    if x < 2:
        raise ValueError("x must be at least 2")
    count = count_N12_value(x, alpha)
    return _record("N12", x, (alpha,), count, _leading_or_nan("N12", alpha, x))


def count_NAP_value(x: int, alpha: RationalExponent, strict_upper: bool = False) -> int:
    """(l, m, n) with ``l < m < n <= x`` and ``floor(l^a) + floor(n^a) == 2 floor(m^a)``."""
    n_top = x - 1 if strict_upper else x
    if n_top < 3:
        return 0
    table = ps_table(alpha, n_top)
    vals = table.values
    total = 0
    for mi in range(1, n_top - 1):
        vm = vals[mi]
        # n > m with v_n <= 2 v_m - 1 so that v_l >= 1
        j = int(np.searchsorted(vals, 2 * vm - 1, side="right"))
        if j <= mi + 1:
            continue
        rest = 2 * vm - vals[mi + 1:j]
        # rest < vm, so any witness l automatically satisfies l < m
        total += int(np.count_nonzero(table.contains(rest)))
    return total


def count_NAP(x: int, alpha: RationalExponent, strict_upper: bool = False) -> CountRecord:
    if x < 2:
        raise ValueError("x must be at least 2")
    count = count_NAP_value(x, alpha, strict_upper)
    return _record("AP", x, (alpha,), count, _leading_or_nan("AP", alpha, x))
