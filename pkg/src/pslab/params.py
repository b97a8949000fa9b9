"""Explicit feasibility witnesses for the inequality systems in (x1, x2).

Here ``x_i`` plays the role of ``1/alpha_i``, the hypothesis region is
``x1, x2 in (1/2, 1)`` with ``x1 + x2 > 3/2``, and every inequality is
reported as a signed slack (positive means satisfied strictly).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .errors import DomainError, EmptyInterval


@dataclass(frozen=True)
class ParamWitness:
    x1: float
    x2: float
    X1: float
    X2: float
    beta1: float
    beta2: float
    gamma_hat0: float
    slacks: Dict[str, float]

    @property
    def gamma0(self) -> float:
        return 1.0 - self.gamma_hat0


def _check_region(x1: float, x2: float) -> None:
    if not (0.5 < x1 < 1 and 0.5 < x2 < 1 and x1 + x2 > 1.5):
        raise DomainError(f"(x1, x2) = ({x1}, {x2}) outside x_i in (1/2,1), x1+x2 > 3/2")


def big_x(x1: float, x2: float) -> Tuple[float, float]:
    d = 2.0 - x1 - x2
    return (1.0 - x1) / d, (1.0 - x2) / d


def verify_lemma01(x1: float, x2: float) -> List[float]:
    """Slacks of the four basic inequalities, in order."""
    _check_region(x1, x2)
    d = 2.0 - x1 - x2
    return [
        x1 + 2.0 * (x2 - 1.0) * d,
        x2 + 2.0 * (x1 - 1.0) * d,
        x1 - (2.0 - x2) * d,
        x2 - (2.0 - x1) * d,
    ]


def beta_bounds(x1: float, x2: float, i: int) -> Tuple[float, float]:
    """Open interval (lower, upper) admissible for ``beta_i``."""
    _check_region(x1, x2)
    d = 2.0 - x1 - x2
    X = big_x(x1, x2)
    xo = x2 if i == 1 else x1  # x_{3-i}
    Xi = X[i - 1]
    lower = max(0.0, 2.0 * (1.0 - xo) - 1.0 / d + 2.0 * Xi)
    upper = min(Xi, 2.0 * (1.0 - xo), 1.0 / d - 2.0)
    return lower, upper


def beta_extra_upper(x1: float, x2: float, i: int) -> float:
    """The additional upper bound every admissible ``beta_i`` also meets."""
    d = 2.0 - x1 - x2
    X = big_x(x1, x2)
    xo = x2 if i == 1 else x1
    return min(0.5 + 0.5 / d - X[2 - i], 1.0 / (3.0 - xo))


def feasible_betas(x1: float, x2: float):
    """Midpoints of the two beta intervals, with the intervals themselves.

    Returns ``(beta1, beta2, ((lo1, hi1), (lo2, hi2)))``.
    """
    out = []
    bounds = []
    for i in (1, 2):
        lo, hi = beta_bounds(x1, x2, i)
        if not lo < hi:
            raise EmptyInterval(f"beta_{i} interval ({lo}, {hi}) is empty at ({x1}, {x2})")
        b = 0.5 * (lo + hi)
        extra = beta_extra_upper(x1, x2, i)
        if not b < extra:
            raise EmptyInterval(f"beta_{i} = {b} violates the extra bound {extra}")
        out.append(b)
        bounds.append((lo, hi))
    return out[0], out[1], tuple(bounds)


GAMMA_LABELS = tuple(f"ineq{k}" for k in range(1, 11))


def gamma_constraints(x1: float, x2: float, beta1: float, beta2: float):
    """The ten constraints written as ``coef * g + const < rhs``, as (coef, const, rhs) triples."""
    s = x1 + x2 - 1.0
    return [
        (beta1, 0.0, 1.0 - x1),
        (-(beta1 / 2.0 + x2 - 1.0), x2 - 0.5, s),
        (beta1 / 2.0, 0.5, s),
        (beta1 - 0.5, x1 - 0.5, s),
        (beta1 + 1.0 - x2, x2 - 1.0, s),
        (beta2, 0.0, 1.0 - x2),
        (-(beta2 / 2.0 + x1 - 1.0), x1 - 0.5, s),
        (beta2 / 2.0, 0.5, s),
        (beta2 - 0.5, x2 - 0.5, s),
        (beta2 + 1.0 - x1, x1 - 1.0, s),
    ]


def gamma_slacks(x1, x2, beta1, beta2, gamma_hat0) -> Dict[str, float]:
    return {
        label: rhs - (coef * gamma_hat0 + const)
        for label, (coef, const, rhs) in zip(GAMMA_LABELS, gamma_constraints(x1, x2, beta1, beta2))
    }


def gamma_interval(x1, x2, beta1, beta2) -> Tuple[float, float]:
    """Open interval of feasible ``gamma_hat0``; each constraint is affine in it."""
    lower = 2.0 - x1 - x2
    upper = 1.0
    for coef, const, rhs in gamma_constraints(x1, x2, beta1, beta2):
        room = rhs - const
        if coef > 0:
            upper = min(upper, room / coef)
        elif coef < 0:
            lower = max(lower, room / coef)
        elif room <= 0:
            return lower, lower
    return lower, upper


def feasible_gamma0(x1: float, x2: float, beta1: float, beta2: float):
    """Midpoint of the feasible ``gamma_hat0`` interval and its ten slacks."""
    _check_region(x1, x2)
    lo, hi = gamma_interval(x1, x2, beta1, beta2)
    if not lo < hi:
        raise EmptyInterval(f"gamma_hat0 interval ({lo}, {hi}) is empty")
    g = 0.5 * (lo + hi)
    return g, gamma_slacks(x1, x2, beta1, beta2, g)


def primed_slacks(x1: float, x2: float, beta1: float, beta2: float) -> Dict[str, float]:
    """Slacks of the reduced inequalities obtained at ``gamma_hat0 = 2 - x1 - x2``."""
    d = 2.0 - x1 - x2
    X1, X2 = big_x(x1, x2)
    return {
        "ineq1": X1 - beta1,
        "ineq2": (beta1 / 2.0 + x2 - 1.0) - X1 + 0.5 / d,
        "ineq3": (0.5 / d - 1.0) - beta1 / 2.0,
        "ineq4": -X2 - (beta1 - 0.5 - 0.5 / d),
        "ineq6": X2 - beta2,
        "ineq7": (beta2 / 2.0 + x1 - 1.0) - X2 + 0.5 / d,
        "ineq8": (0.5 / d - 1.0) - beta2 / 2.0,
        "ineq9": -X1 - (beta2 - 0.5 - 0.5 / d),
    }


def witness(x1: float, x2: float) -> ParamWitness:
    """Full witness: four basic slacks, both betas, gamma_hat0 and its ten slacks."""
    basic = verify_lemma01(x1, x2)
    b1, b2, _ = feasible_betas(x1, x2)
    g, gs = feasible_gamma0(x1, x2, b1, b2)
    X1, X2 = big_x(x1, x2)
    slacks = {f"basic{k}": v for k, v in enumerate(basic, 1)}
    slacks.update(gs)
    return ParamWitness(x1, x2, X1, X2, b1, b2, g, slacks)
