"""Explicit representations ``N = floor(n1**a1) + floor(n2**a2)``.

Phase 1 runs the constructive criterion: pick n1 with ``{n1**a1} < 1/2`` and
``(N + 1/2 - n1**a1)**(1/a2)`` just below an integer, then take n2 as the
next integer. Phase 2 falls back to an exhaustive exact scan. Float tests
only select candidates; every returned pair is certified with big integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import mpmath

from .errors import RepresentationNotFound
from .exactfloor import RationalExponent, floor_pow, is_ps_member, ps_table_upto

BORDER = 1e-9
_MP_DPS = 60


@dataclass(frozen=True)
class Representation:
    n1: int
    n2: int
    verified: bool
    via_lemma: bool


def certify(N: int, n1: int, n2: int, alpha1: RationalExponent, alpha2: RationalExponent) -> bool:
    return n1 >= 1 and n2 >= 1 and floor_pow(n1, alpha1) + floor_pow(n2, alpha2) == N


def _mp_pow(n: int, alpha: RationalExponent):
    return mpmath.power(mpmath.mpf(n), mpmath.mpf(alpha.p) / alpha.q)


def _lemma_terms(N: int, n1: int, alpha1: RationalExponent, alpha2: RationalExponent, precise: bool):
    """Return ``({n1^a1}, {(N+1/2-n1^a1)^(1/a2)}, floor of that root)``."""
    if precise:
        with mpmath.workdps(_MP_DPS):
            p1 = _mp_pow(n1, alpha1)
            rest = mpmath.mpf(N) + mpmath.mpf(1) / 2 - p1
            if rest <= 0:
                return None
            root = mpmath.power(rest, mpmath.mpf(alpha2.q) / alpha2.p)
            fl = int(mpmath.floor(root))
            return float(p1 - mpmath.floor(p1)), float(root - fl), fl
    p1 = float(n1) ** alpha1.value
    rest = N + 0.5 - p1
    if rest <= 0:
        return None
    root = rest ** (1.0 / alpha2.value)
    fl = math.floor(root)
    return p1 - math.floor(p1), root - fl, fl


def lemma_window(N: int, alpha1: RationalExponent) -> Tuple[int, int]:
    """Integer n1 range ``[(N/2)^(1/a1), (3N/4)^(1/a1)]``."""
    lo = math.ceil((N / 2) ** (1.0 / alpha1.value))
    hi = math.floor((3 * N / 4) ** (1.0 / alpha1.value))
    return max(lo, 1), hi


def lemma_candidates(N: int, alpha1: RationalExponent, alpha2: RationalExponent) -> Iterator[Tuple[int, int]]:
    """Yield ``(n1, n2)`` for every n1 in the window that meets both conditions."""
    threshold = (N + 0.5) ** (1.0 / alpha2.value - 1.0) / (2.0 * alpha2.value)
    lo, hi = lemma_window(N, alpha1)
    for n1 in range(lo, hi + 1):
        terms = _lemma_terms(N, n1, alpha1, alpha2, precise=False)
        if terms is None:
            continue
        f1, f2, fl = terms
        c1 = threshold - (1.0 - f2)
        c2 = 0.5 - f1
        border = (abs(c1) < BORDER or abs(c2) < BORDER or f2 < BORDER or 1.0 - f2 < BORDER
                  or f1 < BORDER)
        if border:
            terms = _lemma_terms(N, n1, alpha1, alpha2, precise=True)
            if terms is None:
                continue
            f1, f2, fl = terms
            c1 = threshold - (1.0 - f2)
            c2 = 0.5 - f1
        if c1 >= 0 and c2 > 0:
            yield n1, fl + 1


def find_representation(N: int, alpha1: RationalExponent, alpha2: RationalExponent,
                        fallback: bool = True) -> Representation:
    """Lowest-n1 certified representation, preferring the constructive phase."""
    if N < 2:
        raise ValueError("N must be at least 2")
    for n1, n2 in lemma_candidates(N, alpha1, alpha2):
        if certify(N, n1, n2, alpha1, alpha2):
            return Representation(n1, n2, True, True)
    if fallback:
        for rep in _exhaustive(N, alpha1, alpha2):
            return rep
    raise RepresentationNotFound(f"no representation of {N} with alphas {alpha1}, {alpha2}")


def _exhaustive(N: int, alpha1: RationalExponent, alpha2: RationalExponent) -> Iterator[Representation]:
    n1 = 1
    while True:
        v1 = floor_pow(n1, alpha1)
        if v1 > N - 1:
            return
        m = is_ps_member(N - v1, alpha2)
        if m.member:
            yield Representation(n1, m.witness, certify(N, n1, m.witness, alpha1, alpha2), False)
        n1 += 1


def enumerate_representations(N: int, alpha1: RationalExponent, alpha2: RationalExponent) -> List[Representation]:
    """All ordered representations of N, sorted by n1."""
    if N < 2:
        raise ValueError("N must be at least 2")
    reps = list(_exhaustive(N, alpha1, alpha2))
    if not all(r.verified for r in reps):
        raise AssertionError("uncertified representation produced")
    return reps


def first_zero(alpha1: RationalExponent, alpha2: RationalExponent, N_max: int) -> Optional[int]:
    """Smallest N in [2, N_max] without any representation, if one exists."""
    t1 = ps_table_upto(alpha1, N_max)
    t2 = ps_table_upto(alpha2, N_max)
    for N in range(2, N_max + 1):
        v1 = t1.values[t1.values <= N - 1]
        if not t2.contains(N - v1).any():
            return N
    return None
