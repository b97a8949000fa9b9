import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from pslab.config import LIMITS
from pslab.errors import AlphaNotGreaterThanOne, MalformedDecimal, SizeCapExceeded
from pslab.exactfloor import (
    RationalExponent,
    floor_pow,
    floor_pow_exact,
    frac_criterion,
    frac_criterion_float,
    is_ps_member,
    nth_root_floor,
    parse_alpha,
    phi,
    ps_table,
)

ALPHA_GRID = ["1.01", "1.1", "1.15", "1.2", "1.23", "1.25", "1.3", "4/3", "1.5", "1.9", "1.99", "2", "2.5", "2.9"]


def _alpha(s):
    return RationalExponent.from_fraction(Fraction(s))


@pytest.mark.parametrize("text,p,q", [("1.5", 3, 2), ("1.23", 123, 100), ("2", 2, 1), ("1.250", 5, 4), (" 1.1 ", 11, 10)])
def test_parse_alpha(text, p, q):
    a = parse_alpha(text)
    assert (a.p, a.q) == (p, q)


@pytest.mark.parametrize("text", ["1.0", "1", "0.5", "0"])
def test_parse_alpha_not_above_one(text):
    with pytest.raises(AlphaNotGreaterThanOne):
        parse_alpha(text)


@pytest.mark.parametrize("text", ["", "abc", "1.2.3", "-1.5", "1e3", "nan", "inf", "1/2", "."])
def test_parse_alpha_malformed(text):
    with pytest.raises(MalformedDecimal):
        parse_alpha(text)


def test_rational_exponent_rejects_unreduced():
    with pytest.raises(ValueError):
        RationalExponent(6, 4)


@pytest.mark.parametrize("x,r,y", [(8, 3, 2), (26, 3, 2), (10**6, 5, 15), (0, 4, 0), (1, 7, 1), (99, 1, 99)])
def test_nth_root_floor_examples(x, r, y):
    assert nth_root_floor(x, r) == y


def test_nth_root_floor_derived_value():
    # 15^5 = 759375 <= 10^6 < 16^5 = 1048576
    assert 15**5 == 759375 and 16**5 == 1048576
    assert nth_root_floor(10**6, 5) == 15


@given(st.integers(min_value=0, max_value=10**400), st.integers(min_value=1, max_value=40))
@settings(max_examples=400)
def test_nth_root_floor_certifies(x, r):
    y = nth_root_floor(x, r)
    assert y**r <= x < (y + 1) ** r


@given(st.integers(min_value=1, max_value=10**30), st.integers(min_value=2, max_value=12))
def test_nth_root_floor_exact_powers(y, r):
    assert nth_root_floor(y**r, r) == y
    assert nth_root_floor(y**r - 1, r) == y - 1


@pytest.mark.parametrize("n,alpha,expected", [(2, "1.5", 2), (4, "1.5", 8), (10, "1.2", 15), (9, "1.5", 27), (1, "2.9", 1)])
def test_floor_pow_examples(n, alpha, expected):
    assert floor_pow(n, parse_alpha(alpha)) == expected


def test_floor_pow_fast_path_matches_exact_path():
    for s in ALPHA_GRID:
        a = _alpha(s)
        for n in range(1, 3001):
            assert floor_pow(n, a) == floor_pow_exact(n, a), (n, s)


@given(st.integers(min_value=1, max_value=10**6), st.integers(min_value=2, max_value=400), st.integers(min_value=1, max_value=399))
def test_floor_pow_fast_path_matches_exact_random(n, p, q):
    if math.gcd(p, q) != 1 or p <= q:
        return
    a = RationalExponent(p, q)
    assert floor_pow(n, a) == floor_pow_exact(n, a)


def test_floor_pow_agrees_with_high_precision_float_away_from_integers():
    checked = 0
    for s in ["1.1", "1.23", "1.5", "1.9", "2.5"]:
        a = _alpha(s)
        for n in range(1, 20000, 37):
            for dps in (30, 60):
                with mpmath.workdps(dps):
                    v = mpmath.power(n, mpmath.mpf(a.p) / a.q)
                    fl = mpmath.floor(v)
                    if v - fl > 1e-6 and fl + 1 - v > 1e-6:
                        assert floor_pow(n, a) == int(fl)
                        checked += 1
                        break
    assert checked > 2000


def test_floor_pow_perfect_power_hits():
    a = parse_alpha("1.5")
    for m in range(1, 200):
        assert floor_pow(m * m, a) == m**3


def test_floor_pow_size_cap():
    old = LIMITS.max_bits
    try:
        LIMITS.max_bits = 64
        with pytest.raises(SizeCapExceeded):
            floor_pow_exact(10**6, parse_alpha("1.23"))
    finally:
        LIMITS.max_bits = old


def test_ps_membership_examples():
    a = parse_alpha("1.5")
    m = is_ps_member(2, a)
    assert m.member and m.witness == 2
    m = is_ps_member(3, a)
    assert not m.member and m.witness is None
    # PS(3/2) begins 1, 2, 5, 8, 11, 14, 18
    assert [k for k in range(1, 19) if is_ps_member(k, a).member] == [1, 2, 5, 8, 11, 14, 18]


@pytest.mark.parametrize("s", ["1.1", "1.2", "1.5", "1.9", "2", "2.5"])
def test_membership_matches_enumeration(s):
    a = parse_alpha(s)
    values = {floor_pow_exact(n, a): n for n in range(1, 400)}
    top = floor_pow_exact(399, a)
    for k in range(1, top + 1):
        m = is_ps_member(k, a)
        assert m.member == (k in values)
        if m.member:
            assert m.witness == values[k]


@pytest.mark.parametrize("s", ALPHA_GRID)
def test_round_trip_and_strict_increase(s):
    a = _alpha(s)
    prev = 0
    for n in range(1, 10_001):
        v = floor_pow(n, a)
        assert v > prev
        prev = v
        if n % 97 == 0 or n < 50:
            m = is_ps_member(v, a)
            assert m.member and m.witness <= n and floor_pow(m.witness, a) == v


def test_ps_table_matches_floor_pow():
    a = parse_alpha("1.23")
    t = ps_table(a, 500)
    assert [int(v) for v in t.values] == [floor_pow_exact(n, a) for n in range(1, 501)]
    assert bool(t.contains(int(t.values[10]))) and int(t.witness(int(t.values[10]))) == 11


def test_phi_examples():
    assert phi(1.0, 7.3) == 1.0
    assert phi(2.0, 0.0) == 1.0
    assert phi(2.0, 3.0) == pytest.approx(2 - math.sqrt(3), rel=1e-14)
    with mpmath.workdps(50):
        ref = float(mpmath.power(10**12 + 1, mpmath.mpf(2) / 3) - mpmath.power(10**12, mpmath.mpf(2) / 3))
    assert phi(parse_alpha("1.5"), 10**12) == pytest.approx(ref, rel=1e-12)


@given(st.floats(min_value=1.0, max_value=1e9), st.floats(min_value=1.01, max_value=3.0))
def test_phi_bounds_and_monotone(x, alpha):
    v = phi(alpha, x)
    assert 0 < v < (1 / alpha) * x ** (1 / alpha - 1)
    assert phi(alpha, x + 1.0) <= v


def test_frac_criterion_examples():
    a = parse_alpha("1.5")
    assert frac_criterion(2, 10, a, a)
    assert not frac_criterion(3, 10, a, a)
    for m in range(1, 60):
        n = floor_pow(m, a)
        assert frac_criterion(n, 2 * n, a, a)


def test_frac_criterion_equals_float_form_off_the_boundary():
    a1, a2 = parse_alpha("1.2"), parse_alpha("1.3")
    N = 3000
    agree = 0
    for n in range(1, N):
        exact = frac_criterion(n, N, a1, a2)
        assert exact == (is_ps_member(n, a1).member and is_ps_member(N - n, a2).member)
        u1 = -(n ** (1 / 1.2))
        u2 = -((N - n) ** (1 / 1.3))
        margin = min(abs((u1 - math.floor(u1)) - phi(1.2, n)), abs((u2 - math.floor(u2)) - phi(1.3, N - n)))
        if margin > 1e-9:
            assert exact == frac_criterion_float(n, N, a1, a2)
            agree += 1
    assert agree > 2900
