"""Exact floor powers for rational exponents.

An exponent alpha = p/q is kept as a reduced fraction so that
``floor(n**alpha)`` reduces to an integer q-th root of ``n**p``. Every
membership or counting decision in the package is an integer comparison;
floats only ever propose candidates.
"""

from __future__ import annotations

import math
import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .config import LIMITS
from .errors import AlphaNotGreaterThanOne, MalformedDecimal, SizeCapExceeded

_DECIMAL_RE = re.compile(r"^\+?(\d+)(\.\d*)?$")
_U32 = 2**32


@dataclass(frozen=True, order=True)
class RationalExponent:
    """Exponent ``p/q > 1`` in lowest terms."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 1 or self.p < 1:
            raise AlphaNotGreaterThanOne(f"need positive p, q; got {self.p}/{self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"{self.p}/{self.q} is not reduced")
        if self.p <= self.q:
            raise AlphaNotGreaterThanOne(f"alpha = {self.p}/{self.q} must exceed 1")
        if self.p >= _U32 or self.q >= _U32:
            raise ValueError("p and q must fit in 32 bits")

    @classmethod
    def from_fraction(cls, value: Fraction) -> "RationalExponent":
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    @property
    def value(self) -> float:
        return self.p / self.q

    @property
    def inverse(self) -> float:
        return self.q / self.p

    def __float__(self) -> float:
        return self.value

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


AlphaLike = Union[RationalExponent, float, int, Fraction]


def as_float(alpha: AlphaLike) -> float:
    return float(alpha)


def parse_alpha(text: str) -> RationalExponent:
    """Parse a finite decimal string such as ``"1.23"`` into an exact exponent."""
    if not isinstance(text, str):
        raise MalformedDecimal(f"expected a decimal string, got {type(text).__name__}")
    s = text.strip()
    if not _DECIMAL_RE.match(s) or s in {"+", "."}:
        raise MalformedDecimal(f"not a finite decimal: {text!r}")
    value = Fraction(s)
    if value <= 1:
        raise AlphaNotGreaterThanOne(f"alpha = {text} must exceed 1")
    return RationalExponent.from_fraction(value)


def _check_bits(x: int) -> None:
    cap = LIMITS.max_bits
    if cap is not None and x.bit_length() > cap:
        raise SizeCapExceeded(f"intermediate of {x.bit_length()} bits exceeds cap {cap}")


def nth_root_floor(x: int, r: int) -> int:
    """Return the unique ``y`` with ``y**r <= x < (y+1)**r``."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    if r < 1:
        raise ValueError("r must be positive")
    if r == 1 or x < 2:
        return x
    if r == 2:
        return math.isqrt(x)
    # seed from above so that integer Newton decreases monotonically
    try:
        est = math.exp(math.log(x) / r)
        y = int(est * (1 + 1e-12)) + 2
    except OverflowError:
        y = 1 << (-(-x.bit_length() // r))
    if y**r <= x:
        y = 1 << (-(-x.bit_length() // r))
    while True:
        z = ((r - 1) * y + x // y ** (r - 1)) // r
        if z >= y:
            break
        y = z
    # certification
    while y**r > x:
        y -= 1
    while (y + 1) ** r <= x:
        y += 1
    return y


def nth_root_ceil(x: int, r: int) -> int:
    y = nth_root_floor(x, r)
    return y if y**r == x else y + 1


def floor_pow_exact(n: int, alpha: RationalExponent) -> int:
    """``floor(n**alpha)`` by the pure big-integer path (no float involved)."""
    if n < 1:
        raise ValueError("n must be positive")
    x = n**alpha.p
    _check_bits(x)
    return nth_root_floor(x, alpha.q)


def floor_pow(n: int, alpha: RationalExponent) -> int:
    """``floor(n**alpha)``, exact.

    A double-precision estimate is trusted only when it sits at least
    ``LIMITS.fast_path_margin`` away from an integer and survives one
    big-integer certification; otherwise the pure integer path runs.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if alpha.q == 1:
        return n**alpha.p
    try:
        val = float(n) ** alpha.value
    except OverflowError:
        return floor_pow_exact(n, alpha)
    margin = max(LIMITS.fast_path_margin, val * 4e-15)
    y = math.floor(val)
    if val - y < margin or y + 1 - val < margin or not math.isfinite(val):
        return floor_pow_exact(n, alpha)
    x = n**alpha.p
    _check_bits(x)
    if y**alpha.q <= x < (y + 1) ** alpha.q:
        return y
    return nth_root_floor(x, alpha.q)


@dataclass(frozen=True)
class PsMembership:
    k: int
    member: bool
    witness: Optional[int] = None


def is_ps_member(k: int, alpha: RationalExponent) -> PsMembership:
    """Decide whether ``k = floor(n**alpha)`` for some positive integer n.

    With ``n0`` the least n such that ``n**p >= k**q``, k is a member iff
    ``n0**p < (k+1)**q``; the witness is then n0.
    """
    if k < 1:
        raise ValueError("k must be positive")
    kq = k**alpha.q
    _check_bits(kq)
    n0 = nth_root_ceil(kq, alpha.p)
    if n0**alpha.p < (k + 1) ** alpha.q:
        return PsMembership(k, True, n0)
    return PsMembership(k, False, None)


def phi(alpha: AlphaLike, x):
    """The gap ``(x+1)**(1/alpha) - x**(1/alpha)``; accepts scalars or arrays."""
    a = 1.0 / as_float(alpha)
    if a == 1.0:
        return np.ones_like(np.asarray(x, dtype=float))[()]
    x = np.asarray(x, dtype=float)
    # (x+1)^a - x^a = x^a * expm1(a*log1p(1/x)) avoids cancellation for large x
    with np.errstate(divide="ignore", invalid="ignore"):
        big = np.power(x, a) * np.expm1(a * np.log1p(1.0 / x))
    small = np.power(x + 1.0, a) - np.power(x, a)
    out = np.where(x > 1.0, big, small)
    return out[()]


def frac(x):
    """Fractional part ``x - floor(x)``."""
    x = np.asarray(x, dtype=float)
    return (x - np.floor(x))[()]


def dist_to_int(x):
    """Distance to the nearest integer."""
    x = np.asarray(x, dtype=float)
    return np.abs(x - np.round(x))[()]


def frac_criterion(n: int, N: int, alpha1: RationalExponent, alpha2: RationalExponent) -> bool:
    """``{-n^(1/a1)} < phi_a1(n)`` and ``{-(N-n)^(1/a2)} < phi_a2(N-n)``.

    Evaluated through the exact equivalence with PS membership of n and N-n.
    """
    if not 1 <= n < N:
        raise ValueError("need 1 <= n < N")
    return is_ps_member(n, alpha1).member and is_ps_member(N - n, alpha2).member


def frac_criterion_float(n: int, N: int, alpha1: AlphaLike, alpha2: AlphaLike) -> bool:
    """Float evaluation of the same criterion, for diagnostics only."""
    a1 = 1.0 / as_float(alpha1)
    a2 = 1.0 / as_float(alpha2)
    m = N - n
    return bool(frac(-(n**a1)) < phi(alpha1, n)) and bool(frac(-(m**a2)) < phi(alpha2, m))


class PsTable:
    """Sorted exact values ``floor(n**alpha)`` for ``n = 1..n_max`` as int64."""

    def __init__(self, alpha: RationalExponent, values: np.ndarray):
        self.alpha = alpha
        self.values = values

    @property
    def n_max(self) -> int:
        return len(self.values)

    @property
    def max_value(self) -> int:
        return int(self.values[-1])

    def contains(self, v):
        """Vectorised membership; only valid for values up to ``max_value``."""
        v = np.asarray(v, dtype=np.int64)
        idx = np.searchsorted(self.values, v)
        idx = np.minimum(idx, len(self.values) - 1)
        return self.values[idx] == v

    def witness(self, v):
        """1-based n with ``floor(n**alpha) == v`` or 0."""
        v = np.asarray(v, dtype=np.int64)
        idx = np.searchsorted(self.values, v)
        idx_c = np.minimum(idx, len(self.values) - 1)
        hit = self.values[idx_c] == v
        return np.where(hit, idx_c + 1, 0)


_INT64_SAFE = 2**62
_table_cache: dict = {}
_table_lock = threading.Lock()


def ps_table(alpha: RationalExponent, n_max: int) -> PsTable:
    """Table of the first ``n_max`` elements of PS(alpha); cached and grown on demand."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    with _table_lock:
        have = _table_cache.get(alpha)
        if have is None or len(have) < n_max:
            start = 0 if have is None else len(have)
            new = [floor_pow(n, alpha) for n in range(start + 1, n_max + 1)]
            if new and new[-1] >= _INT64_SAFE:
                raise SizeCapExceeded("PS values exceed the int64 table range")
            arr = np.array(new, dtype=np.int64)
            have = arr if have is None else np.concatenate([have, arr])
            _table_cache[alpha] = have
    return PsTable(alpha, have[:n_max])


def ps_table_upto(alpha: RationalExponent, value_max: int) -> PsTable:
    """Table covering every element of PS(alpha) not exceeding ``value_max``, plus one more."""
    n = max(2, int(value_max ** (1.0 / alpha.value)) + 2)
    while floor_pow(n, alpha) <= value_max:
        n += 1
    return ps_table(alpha, n)
