import math

import pytest
from hypothesis import given, strategies as st
from scipy import integrate, special

from pslab.asymptotics import (
    I_of_alpha,
    REGIONS,
    conjecture_rhs,
    constant_N3,
    double_integral_oracle,
    leading_constant_R,
    leading_constant_R_beta,
)
from pslab.errors import DomainError
from pslab.exactfloor import parse_alpha


def test_leading_constant_examples():
    assert leading_constant_R(2.0, 2.0) == pytest.approx(math.pi / 4, rel=1e-14)
    assert leading_constant_R(1.0 + 1e-12, 1.0 + 1e-12) == pytest.approx(1.0, rel=1e-9)
    a = parse_alpha("1.2")
    assert leading_constant_R(a, a) == pytest.approx(special.beta(5 / 6, 5 / 6) / 1.44, rel=1e-12)


@given(st.floats(min_value=1.001, max_value=10), st.floats(min_value=1.001, max_value=10))
def test_leading_constant_dual_forms(a1, a2):
    assert leading_constant_R(a1, a2) == pytest.approx(leading_constant_R_beta(a1, a2), rel=1e-12)


def test_constant_N3_examples():
    assert constant_N3(2.0) == pytest.approx(math.pi / 4, rel=1e-14)
    assert constant_N3(1.0) == pytest.approx(0.5, rel=1e-14)
    assert 0 < constant_N3(1.25) < math.inf
    for bad in (3.0, 3.5):
        with pytest.raises(DomainError):
            constant_N3(bad)


def _I_scipy(alpha):
    # nested adaptive quadrature of the defining double integral, independent of reg_inc_beta
    e = 1 / alpha - 1

    def inner(u):
        return integrate.quad(lambda v: ((1 - v) * v) ** e, 1 - 1 / u, 1 / u, limit=200)[0]

    return alpha**-3 * integrate.quad(lambda u: u ** (3 / alpha - 2) * inner(u), 1, 2, limit=200)[0]


@pytest.mark.parametrize("alpha", [1.2, 1.5, 2.0, 2.5])
def test_I_matches_nested_quadrature(alpha):
    assert I_of_alpha(alpha) == pytest.approx(_I_scipy(alpha), rel=1e-7)


def test_I_stable_across_tolerances():
    assert I_of_alpha(1.5, tol=1e-8) == pytest.approx(I_of_alpha(1.5, tol=1e-12), rel=1e-8)


def test_conjecture_rhs_relations():
    for s in ["1.1", "1.5", "1.9", "2", "2.5"]:
        a = parse_alpha(s)
        n12, n3, ap = (conjecture_rhs(k, a) for k in ("N12", "N3", "AP"))
        assert n12 > n3 > 0
        assert ap / n12 == pytest.approx(2 ** (-1 / a.value - 1), rel=1e-15)
    with pytest.raises(DomainError):
        conjecture_rhs("N3", 3.0)
    with pytest.raises(ValueError):
        conjecture_rhs("bogus", 1.5)


@pytest.mark.parametrize("alpha", [1.25, 2.0])
def test_oracle_regions_add_up(alpha):
    sq, sim, up = (double_integral_oracle(r, alpha, 800) for r in ("unit-square", "simplex", "x+y>1"))
    assert sq == pytest.approx(sim + up, rel=1e-6)


@pytest.mark.parametrize("alpha", [1.25, 2.0])
def test_simplex_oracle_tends_to_closed_form(alpha):
    assert double_integral_oracle("simplex", alpha, 2000) == pytest.approx(constant_N3(alpha), rel=1e-3)


def test_oracle_rejects_small_grid_and_bad_region():
    assert set(REGIONS) >= {"unit-square", "simplex", "x+y>1", "ap"}
    with pytest.raises(ValueError):
        double_integral_oracle("unit-square", 1.5, 99)
    with pytest.raises(ValueError):
        double_integral_oracle("disk", 1.5, 200)


def test_oracle_deterministic_across_jobs():
    assert double_integral_oracle("x+y>1", 1.5, 600, jobs=1) == double_integral_oracle("x+y>1", 1.5, 600, jobs=4)
