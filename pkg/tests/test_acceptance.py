"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that the terminal summary prints at the
end of the run.
"""

import itertools
import math
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from pslab.asymptotics import I_of_alpha, constant_N3, double_integral_oracle, leading_constant_R, leading_constant_R_beta
from pslab.counting import count_N3, count_N3_value, count_R_bruteforce, count_R_bruteforce_table, count_R_value
from pslab.exactfloor import RationalExponent
from pslab.expsum import discrepancy, run_acceptance_grid
from pslab.experiments import figure1
from pslab.params import feasible_betas, feasible_gamma0, verify_lemma01
from pslab.specfun import gamma
from pslab.witness import certify, find_representation

R = RationalExponent.from_fraction

EQUAL_ALPHAS = [Fraction(11, 10), Fraction(6, 5), Fraction(5, 4), Fraction(4, 3)]
MIXED_POOL = [Fraction(s) for s in ("1.05", "1.1", "1.15", "1.2", "1.25", "1.3", "1.35", "1.4", "1.45", "1.5",
                                    "1.75", "1.9", "2.5")]


def mixed_pairs(k=50, seed=20240601):
    pairs = list(itertools.permutations(MIXED_POOL, 2))
    return random.Random(seed).sample(pairs, k)


def test_criterion_1_oracle_equivalence(report):
    t0 = time.perf_counter()
    cases = [(a, a) for a in EQUAL_ALPHAS] + mixed_pairs()
    assert len(cases) == 54 and len(set(mixed_pairs())) == 50
    mismatches = 0
    for f1, f2 in cases:
        a1, a2 = R(f1), R(f2)
        oracle = count_R_bruteforce_table(2000, a1, a2)
        mismatches += sum(count_R_value(N, a1, a2) != oracle[N] for N in range(2, 2001))
        # the per-N oracle agrees with the batched one
        for N in (2, 777, 2000):
            assert count_R_bruteforce(N, a1, a2) == oracle[N]
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 60
    report(1, ok, f"{len(cases)} alpha pairs x N<=2000, {mismatches} mismatches, {elapsed:.1f}s")
    assert mismatches == 0
    assert elapsed < 60


def test_criterion_2_cesaro_ratio(report):
    t0 = time.perf_counter()
    alpha = R(Fraction(23, 20))
    rec = count_N3(3000, alpha)
    ratio = rec.count / (constant_N3(alpha) * 3000 ** (3 - alpha.value))
    elapsed = time.perf_counter() - t0
    ok = 0.85 <= ratio <= 1.15 and elapsed < 120
    report(2, ok, f"N3(3000, 23/20) ratio {ratio:.4f}, {elapsed:.1f}s")
    assert rec.ratio == pytest.approx(ratio)
    assert 0.85 <= ratio <= 1.15
    assert elapsed < 120


def test_criterion_3_constant_identities(report):
    grid = [1.05 + 0.2 * i for i in range(20)]
    worst = max(abs(leading_constant_R(a, b) - leading_constant_R_beta(a, b)) / leading_constant_R_beta(a, b)
                for a in grid for b in grid)
    g_half = abs(gamma(0.5) - math.sqrt(math.pi))
    ok = worst <= 1e-12 and g_half <= 1e-12
    report(3, ok, f"20x20 grid max rel diff {worst:.2e}; |Gamma(1/2) - sqrt(pi)| = {g_half:.1e}")
    assert worst <= 1e-12
    assert g_half <= 1e-12


@pytest.mark.parametrize("alpha", [1.2, 1.5, 2.0, 2.5])
def test_criterion_4_integral_identities(report, alpha):
    # the oracle already carries the alpha**-3 normalisation
    t0 = time.perf_counter()
    square = double_integral_oracle("unit-square", alpha, 4000)
    t_square = time.perf_counter() - t0
    target = constant_N3(alpha) + I_of_alpha(alpha)
    err1 = abs(square - target) / target
    t0 = time.perf_counter()
    ap = double_integral_oracle("ap", alpha, 4000)
    t_ap = time.perf_counter() - t0
    err3 = abs(ap - 2 ** (-1 / alpha - 1) * square) / ap
    ok = err1 < 1e-3 and err3 < 1e-3 and t_square < 60 and t_ap < 60
    report(4, ok, f"alpha={alpha}: square rel err {err1:.1e}, ap rel err {err3:.1e}, {t_square:.1f}s/{t_ap:.1f}s")
    assert err1 < 1e-3
    assert err3 < 1e-3
    assert t_square < 60 and t_ap < 60


def test_criterion_5_alpha_two_singularity(report):
    neighbours = ["1.9", "1.95", "2.05", "2.1"]
    details = []
    ok = True
    for panel in ("n12", "n3"):
        rows = {Fraction(r.alpha): r.ratio for r in figure1(neighbours + ["2.0"], [5000], panel)}
        peak = rows.pop(Fraction(2))
        ok &= all(peak > v for v in rows.values())
        details.append(f"{panel}: ratio(2.0)={peak:.3f} vs max neighbour {max(rows.values()):.3f}")
    x = 5000
    probe = count_N3_value(x, R(Fraction(2))) / (x * math.log(x) / math.pi)
    ok &= 0.5 <= probe <= 1.5
    report(5, ok, "; ".join(details) + f"; N3(5000,2)/(x ln x/pi) = {probe:.3f}")
    assert ok


def test_criterion_6_lemma_construction(report):
    a1, a2 = R(Fraction(6, 5)), R(Fraction(13, 10))
    t0 = time.perf_counter()
    reps = {N: find_representation(N, a1, a2) for N in range(5000, 5101)}
    elapsed = time.perf_counter() - t0
    via = sum(r.via_lemma for r in reps.values())
    certified = all(certify(N, r.n1, r.n2, a1, a2) and r.verified for N, r in reps.items())
    share = via / len(reps)
    ok = share >= 0.9 and certified and len(reps) == 101 and elapsed < 10
    report(6, ok, f"{via}/101 via lemma, all certified={certified}, {elapsed:.2f}s")
    assert share >= 0.9
    assert certified
    assert elapsed < 10


def test_criterion_7_parameter_sweep(report):
    rng = random.Random(7)
    margin = 1e-6
    failures = 0
    points = 0
    while points < 1000:
        x1 = rng.uniform(0.5 + margin, 1 - margin)
        x2 = rng.uniform(0.5 + margin, 1 - margin)
        if x1 + x2 <= 1.5 + margin:
            continue
        points += 1
        try:
            basic = verify_lemma01(x1, x2)
            b1, b2, ((lo1, hi1), (lo2, hi2)) = feasible_betas(x1, x2)
            _, slacks = feasible_gamma0(x1, x2, b1, b2)
        except Exception:
            failures += 1
            continue
        if not (all(v > 0 for v in basic) and lo1 < hi1 and lo2 < hi2
                and len(slacks) == 10 and all(v > 0 for v in slacks.values())):
            failures += 1
    report(7, failures == 0, f"{points} random points, {failures} failures")
    assert failures == 0


def test_criterion_8_exponential_sum_bounds(report):
    reports = run_acceptance_grid()
    worst_label, worst = max(((label, rep.ratio) for label, rep in reports), key=lambda t: t[1])
    ok = all(math.isfinite(rep.ratio) for _, rep in reports) and worst <= 10
    print(f"max BoundReport ratio {worst:.4f} ({worst_label})")
    report(8, ok, f"{len(reports)} instances, max ratio {worst:.3f} at {worst_label}")
    assert worst <= 10


def test_criterion_9_equidistribution(report):
    d = discrepancy(Fraction(6, 5), 100_000, 1000)
    report(9, d < 0.01, f"discrepancy(6/5, 1e5, 1000) = {d:.5f}")
    assert d < 0.01


def test_criterion_10_determinism(report, tmp_path):
    env = dict(os.environ)
    env.pop("PSLAB_JOBS", None)
    outputs = []
    for jobs in ("1", "8"):
        res = subprocess.run([sys.executable, "-m", "pslab", "figure1", "--jobs", jobs],
                             capture_output=True, env=env, cwd=tmp_path)
        assert res.returncode == 0, res.stderr.decode()
        outputs.append(res.stdout)
    same = outputs[0] == outputs[1]
    rows = outputs[0].count(b"\n") - 1
    report(10, same and rows == 63, f"figure1 default grid ({rows} rows) byte-identical across --jobs 1/8: {same}")
    assert rows == 63
    assert same
