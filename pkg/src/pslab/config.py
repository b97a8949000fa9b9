"""Run-time knobs shared across modules."""

from dataclasses import dataclass
from typing import Optional


@dataclass
class Limits:
    # bit cap for intermediate big integers in exact floor evaluation; None = unbounded
    max_bits: Optional[int] = None
    # largest N accepted by the brute-force representation oracle
    bruteforce_cap: int = 10**5
    # longest interval accepted by direct exponential-sum evaluation
    expsum_max_length: int = 10**8
    # distance from an integer below which the float fast path is not trusted
    fast_path_margin: float = 1e-6


LIMITS = Limits()
