"""Closed-form main-term constants, conjectured limits, and a 2-D integral oracle.

The integrand throughout is ``(x y (x+y))**(1/alpha - 1)`` (or its 3-AP
analogue) on subsets of the unit square, normalised by ``alpha**-3``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .errors import DomainError
from .exactfloor import AlphaLike, as_float
from .specfun import beta, gamma, integrate_singular, reg_inc_beta


@dataclass(frozen=True)
class ConstantBundle:
    alphas: Tuple[float, ...]
    value: float
    formula_id: str


def _check_alpha(alpha: float, upper: float = math.inf) -> float:
    if not 1.0 <= alpha < upper:
        raise DomainError(f"alpha = {alpha} outside [1, {upper})")
    return alpha


def leading_constant_R(alpha1: AlphaLike, alpha2: AlphaLike) -> float:
    """``Gamma(1+1/a1) Gamma(1+1/a2) / Gamma(1/a1+1/a2)``.

    Cross-checked against ``B(1/a1, 1/a2) / (a1 a2)``.
    """
    a1 = _check_alpha(as_float(alpha1))
    a2 = _check_alpha(as_float(alpha2))
    via_gamma = gamma(1 + 1 / a1) * gamma(1 + 1 / a2) / gamma(1 / a1 + 1 / a2)
    via_beta = beta(1 / a1, 1 / a2) / (a1 * a2)
    if abs(via_gamma - via_beta) > 1e-12 * max(1.0, abs(via_gamma)):
        raise ArithmeticError(f"gamma and beta forms disagree: {via_gamma!r} vs {via_beta!r}")
    return via_gamma


def leading_constant_R_beta(alpha1: AlphaLike, alpha2: AlphaLike) -> float:
    a1, a2 = as_float(alpha1), as_float(alpha2)
    return beta(1 / a1, 1 / a2) / (a1 * a2)


def constant_N3(alpha: AlphaLike) -> float:
    """``Gamma(1+1/a)**2 / ((3-a) Gamma(2/a))`` for ``1 <= a < 3``."""
    a = _check_alpha(as_float(alpha), 3.0)
    return gamma(1 + 1 / a) ** 2 / ((3 - a) * gamma(2 / a))


def I_of_alpha(alpha: AlphaLike, tol: float = 1e-12) -> float:
    """Contribution of the region ``x + y > 1`` to the unit-square integral.

    The inner integral over v is written with the regularized incomplete
    Beta, leaving a single quadrature over u in [1, 2].
    """
    a = _check_alpha(as_float(alpha), 3.0)
    s = 1.0 / a
    B = beta(s, s)
    power = 3.0 / a - 2.0

    def outer(u: float) -> float:
        hi = 1.0 / u
        lo = 1.0 - hi
        return u**power * B * (reg_inc_beta(hi, s, s) - reg_inc_beta(lo, s, s))

    return integrate_singular(outer, 1.0, 2.0, tol).value / a**3


def conjecture_rhs(kind: str, alpha: AlphaLike) -> float:
    """Conjectured limit of ``count / N**(3-alpha)`` for ``kind`` in N12, N3, AP."""
    a = as_float(alpha)
    if not 1.0 < a < 3.0:
        raise DomainError(f"conjectured limits need 1 < alpha < 3, got {a}")
    kind = kind.upper()
    if kind == "N3":
        return constant_N3(a)
    if kind == "N12":
        return constant_N3(a) + I_of_alpha(a)
    if kind == "AP":
        return 2.0 ** (-1.0 / a - 1.0) * (constant_N3(a) + I_of_alpha(a))
    raise ValueError(f"unknown kind {kind!r}")


REGIONS = ("unit-square", "simplex", "x+y>1", "ap")


def _grading_power(alpha: float) -> int:
    # the integrand carries x**g and (x,y) -> 0 homogeneous degree 3g with g = 1/alpha - 1;
    # grade so that the worst transformed exponent is >= 2
    worst = 3.0 / alpha - 1.0
    return max(2, math.ceil(3.0 / worst))


def _row_bounds(region: str, x: np.ndarray):
    one = np.ones_like(x)
    if region == "unit-square":
        return np.zeros_like(x), one
    if region == "simplex":
        return np.zeros_like(x), 1.0 - x
    if region == "x+y>1":
        return 1.0 - x, one
    if region == "ap":
        return x, 0.5 * (1.0 + x)
    raise ValueError(f"unknown region {region!r}; expected one of {REGIONS}")


def double_integral_oracle(region: str, alpha: AlphaLike, grid: int, jobs: int = 1) -> float:
    """``alpha**-3`` times a midpoint-rule sum over ``region``.

    Regions: ``unit-square``, ``simplex`` (x+y <= 1), ``x+y>1`` (inside the
    unit square) and ``ap`` (0 < x < y, 2y - x <= 1, integrand
    ``(x y (2y-x))**g``). The midpoint rule runs on a ``grid x grid`` mesh
    that is uniform after the substitutions ``x = t**m`` and
    ``y = lo(x) + (hi(x) - lo(x)) s**m``; the power m grows with alpha so
    the endpoint singularities are smoothed. Midpoints never touch the
    singular boundary. Rows are summed in fixed-size blocks and reduced in
    order, so the result does not depend on ``jobs``.
    """
    if grid < 100:
        raise ValueError("grid must be at least 100")
    a = as_float(alpha)
    if not 1.0 < a < 3.0:
        raise DomainError(f"oracle needs 1 < alpha < 3, got {a}")
    if region not in REGIONS:
        raise ValueError(f"unknown region {region!r}; expected one of {REGIONS}")
    g = 1.0 / a - 1.0
    m = _grading_power(a)
    h = 1.0 / grid
    mid = (np.arange(grid) + 0.5) * h
    x_all = mid**m
    jx_all = m * mid ** (m - 1) * h
    s_pow = mid**m
    js = m * mid ** (m - 1) * h
    block = 64

    def rows(start: int) -> float:
        x = x_all[start:start + block][:, None]
        jx = jx_all[start:start + block][:, None]
        lo, hi = _row_bounds(region, x)
        width = hi - lo
        y = lo + width * s_pow[None, :]
        jac = jx * width * js[None, :]
        if region == "ap":
            third = 2.0 * y - x
        else:
            third = x + y
        vals = (x * y * third) ** g * jac
        return float(np.sum(vals))

    starts = range(0, grid, block)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(rows, starts))
    else:
        parts = [rows(s) for s in starts]
    return math.fsum(parts) / a**3
