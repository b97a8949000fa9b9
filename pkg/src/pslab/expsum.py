"""Exponential sums over phase families and empirical checks of derivative-test bounds.

The implied constants of the classical estimates are unknown, so every
checker returns a :class:`BoundReport` whose ``ratio`` is ``|S| / bound``.
Only a generous ceiling on that ratio is ever asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import numpy as np

from .config import LIMITS
from .errors import HypothesisViolated, IntervalTooLarge
from .exactfloor import AlphaLike, RationalExponent, as_float, phi

SECTION_THREE = "SectionThree"
APPENDIX = "Appendix"
MODEL = "Model"

_SAMPLES = 10_000
_CHUNK = 1 << 20


@dataclass(frozen=True)
class PhaseSpec:
    """A phase ``f`` evaluated at integers.

    * SectionThree: ``h1 x**(1/a1) + h2 (N - x)**(1/a2)``
    * Appendix:     ``h1 x**a1 + h2 (X - x**a1)**(1/a2)``
    * Model:        ``y x**(1-s) / (1-s)``, or ``y log x`` when s == 1
    """

    family: str
    h1: int = 0
    h2: int = 0
    alpha1: Optional[RationalExponent] = None
    alpha2: Optional[RationalExponent] = None
    N_or_X: float = 0.0
    y: float = 0.0
    s: float = 0.0

    def __post_init__(self):
        if self.family in (SECTION_THREE, APPENDIX):
            if self.alpha1 is None or self.alpha2 is None:
                raise ValueError(f"{self.family} phase needs alpha1 and alpha2")
            if self.h1 == 0 and self.h2 == 0:
                raise ValueError("at least one of h1, h2 must be nonzero")
            if not self.N_or_X > 0:
                raise ValueError("N_or_X must be positive")
        elif self.family == MODEL:
            if self.y == 0:
                raise ValueError("model phase needs y != 0")
        else:
            raise ValueError(f"unknown phase family {self.family!r}")

    @classmethod
    def section_three(cls, h1, h2, alpha1, alpha2, N) -> "PhaseSpec":
        return cls(SECTION_THREE, h1, h2, alpha1, alpha2, float(N))

    @classmethod
    def appendix(cls, h1, h2, alpha1, alpha2, X) -> "PhaseSpec":
        return cls(APPENDIX, h1, h2, alpha1, alpha2, float(X))

    @classmethod
    def model(cls, y, s) -> "PhaseSpec":
        return cls(MODEL, y=float(y), s=float(s))

    def negated(self) -> "PhaseSpec":
        if self.family == MODEL:
            return PhaseSpec.model(-self.y, self.s)
        return PhaseSpec(self.family, -self.h1, -self.h2, self.alpha1, self.alpha2, self.N_or_X)

    # -- phase values, reduced mod 1 term by term --------------------------
    def frac_value(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.family == SECTION_THREE:
            a1, a2 = 1.0 / self.alpha1.value, 1.0 / self.alpha2.value
            t1 = np.mod(self.h1 * x**a1, 1.0)
            t2 = np.mod(self.h2 * (self.N_or_X - x) ** a2, 1.0)
            return np.mod(t1 + t2, 1.0)
        if self.family == APPENDIX:
            a1, b = self.alpha1.value, 1.0 / self.alpha2.value
            xa = x**a1
            t1 = np.mod(self.h1 * xa, 1.0)
            t2 = np.mod(self.h2 * (self.N_or_X - xa) ** b, 1.0)
            return np.mod(t1 + t2, 1.0)
        return np.mod(self.value(x), 1.0)

    def value(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.family == SECTION_THREE:
            a1, a2 = 1.0 / self.alpha1.value, 1.0 / self.alpha2.value
            return self.h1 * x**a1 + self.h2 * (self.N_or_X - x) ** a2
        if self.family == APPENDIX:
            a1, b = self.alpha1.value, 1.0 / self.alpha2.value
            return self.h1 * x**a1 + self.h2 * (self.N_or_X - x**a1) ** b
        if self.s == 1.0:
            return self.y * np.log(x)
        return self.y * x ** (1.0 - self.s) / (1.0 - self.s)

    # -- closed-form derivatives -------------------------------------------
    def derivative(self, x: np.ndarray, order: int) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if order not in (1, 2, 3):
            raise ValueError("order must be 1, 2 or 3")
        if self.family == SECTION_THREE:
            a1, a2 = 1.0 / self.alpha1.value, 1.0 / self.alpha2.value
            w = self.N_or_X - x
            c1 = _falling(a1, order)
            c2 = _falling(a2, order)
            return self.h1 * c1 * x ** (a1 - order) + self.h2 * (-1) ** order * c2 * w ** (a2 - order)
        if self.family == APPENDIX:
            a1 = self.alpha1.value
            first = self.h1 * _falling(a1, order) * x ** (a1 - order) if self.h1 else 0.0
            second = self.h2 * appendix_f2_derivative(x, self.alpha1, self.alpha2, self.N_or_X, order)
            return first + second
        y, s = self.y, self.s
        if order == 1:
            return y * x ** (-s)
        if order == 2:
            return -s * y * x ** (-s - 1.0)
        return s * (s + 1.0) * y * x ** (-s - 2.0)


def _falling(a: float, k: int) -> float:
    out = 1.0
    for i in range(k):
        out *= a - i
    return out


def appendix_f2_derivative(x, alpha1: AlphaLike, alpha2: AlphaLike, X: float, order: int):
    """Derivatives of ``(X - x**a1)**(1/a2)``."""
    a1 = as_float(alpha1)
    b = 1.0 / as_float(alpha2)
    x = np.asarray(x, dtype=float)
    w = X - x**a1
    if order == 1:
        return -b * a1 * x ** (a1 - 1.0) * w ** (b - 1.0)
    if order == 2:
        return -b * a1 * x ** (a1 - 2.0) * w ** (b - 2.0) * ((a1 - 1.0) * X + (1.0 - a1 * b) * x**a1)
    if order == 3:
        return -b * a1 * (
            (a1 - 1.0) * (a1 - 2.0) * x ** (a1 - 3.0) * w ** (b - 1.0)
            - 3.0 * a1 * (a1 - 1.0) * (b - 1.0) * x ** (2.0 * a1 - 3.0) * w ** (b - 2.0)
            + a1 * a1 * (b - 1.0) * (b - 2.0) * x ** (3.0 * a1 - 3.0) * w ** (b - 3.0)
        )
    raise ValueError("order must be 1, 2 or 3")


@dataclass(frozen=True)
class BoundReport:
    test: str
    sum_abs: float
    bound: float
    ratio: float
    params: Dict[str, float] = field(default_factory=dict)


def _integer_range(a: float, b: float) -> Tuple[int, int]:
    lo = math.ceil(a)
    hi = math.floor(b)
    return lo, hi


def exp_sum(phase: PhaseSpec, a: float, b: float) -> complex:
    """``sum over integers n in [a, b] of e(f(n))``, accurately summed."""
    if b - a > LIMITS.expsum_max_length:
        raise IntervalTooLarge(f"interval length {b - a:g} above {LIMITS.expsum_max_length:g}")
    lo, hi = _integer_range(a, b)
    re_parts, im_parts = [], []
    for start in range(lo, hi + 1, _CHUNK):
        n = np.arange(start, min(start + _CHUNK, hi + 1), dtype=float)
        theta = 2.0 * math.pi * phase.frac_value(n)
        re_parts.append(math.fsum(np.cos(theta)))
        im_parts.append(math.fsum(np.sin(theta)))
    return complex(math.fsum(re_parts), math.fsum(im_parts))


def _samples(a: float, b: float) -> np.ndarray:
    return np.linspace(a, b, _SAMPLES)


def _report(test, phase, a, b, bound, params) -> BoundReport:
    s = abs(exp_sum(phase, a, b))
    return BoundReport(test, s, bound, s / bound, params)


def check_kusmin_landau(phase: PhaseSpec, a: float, b: float) -> BoundReport:
    """First-derivative test: ``|S| << 1/lambda1`` when f' is monotone and ``||f'|| >= lambda1``."""
    xs = _samples(a, b)
    d2 = phase.derivative(xs, 2)
    scale = float(np.max(np.abs(d2))) if d2.size else 0.0
    eps = 1e-12 * scale
    if not (np.all(d2 >= -eps) or np.all(d2 <= eps)):
        raise HypothesisViolated("f' is not monotone on the interval")
    d1 = phase.derivative(np.array([a, b]), 1)
    lo, hi = float(min(d1)), float(max(d1))
    base = math.floor(lo)
    if hi >= base + 1 or lo == base:
        lam1 = 0.0
    else:
        lam1 = min(lo - base, base + 1 - hi)
    if lam1 <= 1e-12:
        raise HypothesisViolated("||f'|| vanishes on the interval")
    return _report("kusmin_landau", phase, a, b, 1.0 / lam1, {"lambda1": lam1})


def check_van_der_corput(phase: PhaseSpec, a: float, b: float) -> BoundReport:
    """Second-derivative test: ``|S| << |I| Lambda2 lambda2**-1/2 + lambda2**-1/2``."""
    length = b - a
    if length < 1:
        raise HypothesisViolated("second-derivative test needs |I| >= 1")
    d2 = phase.derivative(_samples(a, b), 2)
    if not (np.all(d2 > 0) or np.all(d2 < 0)):
        raise HypothesisViolated("f'' changes sign or vanishes on the interval")
    lam2 = float(np.min(np.abs(d2)))
    Lam2 = float(np.max(np.abs(d2)))
    bound = length * Lam2 * lam2**-0.5 + lam2**-0.5
    return _report("van_der_corput", phase, a, b, bound,
                   {"lambda2": lam2, "Lambda2": Lam2, "c": Lam2 / lam2})


def check_third_derivative(phase: PhaseSpec, a: float, b: float) -> BoundReport:
    """Third-derivative test: ``|S| <<_c |I| lambda3**(1/6) + lambda3**(-1/3)``."""
    length = b - a
    if length < 1:
        raise HypothesisViolated("third-derivative test needs |I| >= 1")
    d3 = phase.derivative(_samples(a, b), 3)
    if not (np.all(d3 > 0) or np.all(d3 < 0)):
        raise HypothesisViolated("f''' changes sign or vanishes on the interval")
    lam3 = float(np.min(np.abs(d3)))
    Lam3 = float(np.max(np.abs(d3)))
    bound = length * lam3 ** (1.0 / 6.0) + lam3 ** (-1.0 / 3.0)
    return _report("third_derivative", phase, a, b, bound, {"lambda3": lam3, "c": Lam3 / lam3})


EXPONENT_PAIRS = ((0.0, 1.0), (0.5, 0.5), (1.0 / 6.0, 2.0 / 3.0))


def check_exponent_pair(pair, y: float, s: float, N: int, a: float, b: float) -> BoundReport:
    """Exponent-pair estimate ``L**k N**l + 1/L`` for the model phase, ``L = y N**-s``."""
    k, l = pair
    if not any(abs(k - pk) < 1e-12 and abs(l - pl) < 1e-12 for pk, pl in EXPONENT_PAIRS):
        raise ValueError(f"unsupported exponent pair {pair}")
    if not (y > 0 and s > 0):
        raise ValueError("exponent-pair estimate needs y, s > 0")
    if not (N <= a <= b <= 2 * N):
        raise ValueError("interval must lie inside [N, 2N]")
    L = y * N ** (-s)
    bound = L**k * N**l + 1.0 / L
    phase = PhaseSpec.model(y, s)
    return _report("exponent_pair", phase, a, b, bound, {"k": k, "l": l, "L": L})


def koksma_error(
    N: int,
    alpha1: AlphaLike,
    alpha2: AlphaLike,
    c1: float,
    c2: float,
    c3: float,
    c4: float,
    b1: Optional[float] = None,
    b2: Optional[float] = None,
) -> float:
    """Count minus expectation for the two fractional-part windows on ``(c1 N, c2 N]``.

    Counts integers n with ``{-n**(1/a1)} < b1`` and ``{-(N-n)**(1/a2)} < b2``
    and subtracts ``(c2 - c1) N b1 b2``. The thresholds default to
    ``phi_a1(c3 N)`` and ``phi_a2(c4 N)``.
    """
    if not 0 < c1 < c2 < 1:
        raise ValueError("need 0 < c1 < c2 < 1")
    if b1 is None:
        b1 = float(phi(alpha1, c3 * N))
    if b2 is None:
        b2 = float(phi(alpha2, c4 * N))
    lo = math.floor(c1 * N) + 1
    hi = math.floor(c2 * N)
    n = np.arange(lo, hi + 1, dtype=float)
    u1 = -(n ** (1.0 / as_float(alpha1)))
    u2 = -((N - n) ** (1.0 / as_float(alpha2)))
    inside = ((u1 - np.floor(u1)) < b1) & ((u2 - np.floor(u2)) < b2)
    return float(np.count_nonzero(inside)) - (c2 - c1) * N * b1 * b2


def discrepancy(alpha: AlphaLike, n_max: int, bins: int) -> float:
    """Binned star discrepancy of ``{-n**(1/alpha)}`` for ``n = 1..n_max``.

    Takes the largest deviation ``|#{x_n < j/bins}/n_max - j/bins|`` over
    ``j = 1..bins``.
    """
    if bins < 10:
        raise ValueError("bins must be at least 10")
    n = np.arange(1, n_max + 1, dtype=float)
    u = -(n ** (1.0 / as_float(alpha)))
    pts = u - np.floor(u)
    idx = np.minimum((pts * bins).astype(np.int64), bins - 1)
    cum = np.cumsum(np.bincount(idx, minlength=bins))
    grid = np.arange(1, bins + 1) / bins
    return float(np.max(np.abs(cum / n_max - grid)))


def acceptance_grid():
    """Fixed instances for the bound-ratio ceiling check.

    Each entry is ``(label, checker, args)``; every instance satisfies the
    hypotheses of its test.
    """
    r = RationalExponent
    a65, a1310 = r(6, 5), r(13, 10)
    X = 5000.5
    app_lo, app_hi = (X / 2) ** (1 / 1.2), (3 * X / 4) ** (1 / 1.2)
    grid = [
        ("vdc quadratic theta=1e-3 [1,1000]", check_van_der_corput, (PhaseSpec.model(2e-3, -1.0), 1, 1000)),
        ("vdc model y=1 s=1/2 [1e4,2e4]", check_van_der_corput, (PhaseSpec.model(1.0, 0.5), 1e4, 2e4)),
        ("vdc model y=100 s=1/2 [1e4,2e4]", check_van_der_corput, (PhaseSpec.model(100.0, 0.5), 1e4, 2e4)),
        ("vdc S3 h=(1,1) 6/5 N=1e4 [2500,5000]", check_van_der_corput,
         (PhaseSpec.section_three(1, 1, a65, a65, 10_000), 2500, 5000)),
        ("vdc S3 h=(2,3) 6/5,13/10 N=1e5 [25000,50000]", check_van_der_corput,
         (PhaseSpec.section_three(2, 3, a65, a1310, 100_000), 25_000, 50_000)),
        ("vdc S3 h=(3,-1) 6/5 N=1e5 [25000,50000]", check_van_der_corput,
         (PhaseSpec.section_three(3, -1, a65, a65, 100_000), 25_000, 50_000)),
        ("vdc App h=(0,1) 6/5,13/10 X=5000.5", check_van_der_corput,
         (PhaseSpec.appendix(0, 1, a65, a1310, X), app_lo, app_hi)),
        ("vdc App h=(0,7) 6/5,13/10 X=5000.5", check_van_der_corput,
         (PhaseSpec.appendix(0, 7, a65, a1310, X), app_lo, app_hi)),
        ("third cubic theta=1e-7 [1,1000]", check_third_derivative, (PhaseSpec.model(3e-7, -2.0), 1, 1000)),
        ("third model y=1 s=1/2 [1e4,2e4]", check_third_derivative, (PhaseSpec.model(1.0, 0.5), 1e4, 2e4)),
        ("third S3 h=(1,-1) 6/5 N=1e4 [2500,5000]", check_third_derivative,
         (PhaseSpec.section_three(1, -1, a65, a65, 10_000), 2500, 5000)),
        ("third S3 h=(2,-3) 6/5,13/10 N=1e5 [25000,50000]", check_third_derivative,
         (PhaseSpec.section_three(2, -3, a65, a1310, 100_000), 25_000, 50_000)),
        ("third App h=(1,0) 6/5,13/10 X=5000.5", check_third_derivative,
         (PhaseSpec.appendix(1, 0, a65, a1310, X), app_lo, app_hi)),
    ]
    for N in (10_000, 100_000):
        for y in (1.0, 10.0, 100.0):
            for s in (0.5, 1.0 / 6.0):
                for pair in EXPONENT_PAIRS:
                    label = f"pair {pair[0]:.3g},{pair[1]:.3g} y={y:g} s={s:.3g} N={N}"
                    grid.append((label, check_exponent_pair, (pair, y, s, N, N, 2 * N)))
    return grid


def run_acceptance_grid():
    return [(label, fn(*args)) for label, fn, args in acceptance_grid()]
