"""Acceptance gate: one test per release criterion, at the stated tolerances.

Each test is a single pass/fail line under ``pytest -v``.  Ranges, tolerances,
and runtime budgets are fixed here and must not be weakened.
"""

import time
from fractions import Fraction

import pytest

from opcert.cutoffs import (CutoffValue, cutoff_compare, cutoff_set, n_tilde,
                            turan_cutoff_set)
from opcert.differences import (C_r, G_value, UL_lemma24, H_value,
                                asymptote_scan, corollary_checks,
                                signed_diff_log, theorem14_bounds,
                                verify_theorem14)
from opcert.intervals import CertInterval, Tri, ipow, tri_compare
from opcert.overpartitions import bruteforce_count, build_table
from opcert.turan import (log_linear_vs_root_check, m_polynomials,
                          pbar_power_check, reverse_turan_check,
                          s_bounds_check, starred_refinement_check,
                          theorem35_check)
from opcert.zuckerman import certified_enclosure, exact_from_series
import opcert.coefficients as coef

A0 = Fraction(0)
A1 = Fraction(1)


def test_criterion_01_oracle_equivalence_under_1s(table):
    start = time.time()
    small = build_table(60)
    for n in range(61):
        assert small.values[n] == bruteforce_count(n), f"mismatch at n={n}"
    assert small.values[3] == 8
    assert time.time() - start < 1.0


def test_criterion_02_log_concavity_to_5000_under_10s(table):
    start = time.time()
    v = table.values
    for n in range(2, 5001):
        assert v[n] * v[n] >= v[n - 1] * v[n + 1], f"log-concavity fails at n={n}"
    assert time.time() - start < 10.0


def test_criterion_03_series_containment_and_exact_recovery(table):
    start = time.time()
    for n in range(1, 1501):
        for N in (1, 3, 9):
            enc = certified_enclosure(n, N, 128)
            assert enc.total.lo <= table.values[n] <= enc.total.hi, (n, N)
    for n in (2500, 3000, 4000):
        assert exact_from_series(n) == table.values[n], n
    assert time.time() - start < 120.0


def test_criterion_04_convexity_cutoffs_and_failure_at_three(table):
    assert corollary_checks(table, 3, A0, 192).convexity is Tri.GREATER
    for n in range(4, 3001):
        assert corollary_checks(table, n, A0, 192).convexity is Tri.LESS, n
    for n in range(19, 3001):
        assert corollary_checks(table, n, A1, 192).convexity is Tri.LESS, n


def test_criterion_05_sandwich_theorem_r2_and_r3(table):
    assert cutoff_set(2, A0, 256).N == 5505
    n3 = cutoff_set(3, A0, 256).N
    assert n3 <= 6000
    for n in range(5505, 6001):
        assert verify_theorem14(table, n, 2, A0, 384).verdict == "Holds", n
    for n in range(n3, n3 + 301):
        assert verify_theorem14(table, n, 3, A0, 384).verdict == "Holds", n


def test_criterion_06_remainder_difference_bound(table):
    for r in (2, 3):
        start_n = cutoff_set(r, A0, 256).N1
        for n in range(start_n, 3001):
            g = abs(G_value(table, n, r, 256))
            bound = 1 / ipow(CertInterval.from_exact(n, 256),
                             Fraction(2 * r + 3, 2))
            assert tri_compare(g, bound) is Tri.LESS, (r, n)


def test_criterion_07_asymptote_convergence_and_in_bounds(table):
    limit = C_r(2, 256)
    scan = dict(asymptote_scan(table, 2, A0, [1000, 4000], 256))
    gap1 = abs(scan[1000] - limit).hi
    gap4 = abs(scan[4000] - limit).hi
    assert gap4 < gap1
    assert gap4 < Fraction(1, 2)
    for n in range(5505, 6001):
        lower, upper = theorem14_bounds(n, 2, A0, 384)
        value = signed_diff_log(table, n, 2, A0, 384).value
        scale = ipow(CertInterval.from_exact(n, 384), Fraction(5, 2))
        assert tri_compare(scale * lower, scale * value) is Tri.LESS, n
        assert tri_compare(scale * value, scale * upper) is Tri.LESS, n


def test_criterion_08_root_ratio_expansions(table):
    for n in range(1, 3001):
        assert s_bounds_check(table, n, "plus", 320) == "Holds", n
    for n in range(2, 3001):
        assert s_bounds_check(table, n, "minus", 320) == "Holds", n


def test_criterion_09_power_bounds_and_ratio_sandwich(table):
    for n in range(2, 3001):
        assert pbar_power_check(table, n, 320) == "Holds", n
    for alpha in (A0, A1):
        start_n = max(n_tilde(alpha), 5505)
        for n in range(start_n, 6001):
            assert theorem35_check(table, n, alpha, 384).verdict == "Holds", (alpha, n)


def test_criterion_10_quadratic_form_identity():
    for n in (10, 100, 1000):
        for alpha in (A0, A1, Fraction(5, 2)):
            resid = m_polynomials(n, alpha, 256).identity_residual
            assert resid.lo <= 0 <= resid.hi, (n, alpha)
            assert resid.width() < Fraction(1, 10**20), (n, alpha)


def test_criterion_11_reverse_turan_and_cubic_agree(table):
    for n in range(4, 3001):
        rep = reverse_turan_check(table, n, A0, 192)
        assert rep.verdict == "Holds", n
        assert rep.cubic_class == "OneRealTwoComplex", n
        # cross-check: certified u > 1 at n and n+1 forces the strict
        # inequality (AM-GM), so the hypothesis verdict must agree
        assert rep.hypothesis == "Holds", n
        assert rep.lhs.hi < rep.rhs.lo, n


def test_criterion_12_cutoff_arithmetic():
    cuts = turan_cutoff_set(A0, 256)
    assert cuts.n_u.form == "ExpForm"
    assert cuts.n_u.ln_value.lo <= 1073743872 <= cuts.n_u.ln_value.hi
    assert cuts.literal == 343361460986
    assert cutoff_compare(CutoffValue.from_int(343361460986), cuts.n_u) is Tri.LESS


def test_criterion_13_starred_refinements_at_astronomical_n():
    cuts = turan_cutoff_set(A0, 320)
    at_cutoff = starred_refinement_check(cuts.n_u, A0, 320)
    assert all(v is Tri.LESS for v in at_cutoff.values()), at_cutoff
    far = CutoffValue.from_ln(10 * cuts.n_u.ln(320))
    at_far = starred_refinement_check(far, A0, 320)
    assert all(v is Tri.LESS for v in at_far.values()), at_far
    # one explicit log-linear-vs-root instance at its own cutoff
    a, b = coef.refinement_pairs(A0, 320)["upper"]
    assert log_linear_vs_root_check(a, b, cuts.n_u, Fraction(1, 4), 320) is Tri.LESS
