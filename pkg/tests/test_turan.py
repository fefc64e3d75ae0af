"""Ratio bounds, the coefficient identity, and the reverse quartic inequality."""

from fractions import Fraction

import pytest

from opcert.intervals import CertInterval, Tri, ipow, pi_interval
from opcert.turan import (HypothesisError, error_term_bounds,
                          jensen_cubic_classify, m_polynomials,
                          pbar_power_check, power_quotient_check,
                          reverse_turan_check, s_bounds_check, starred_bounds,
                          starred_refinement_check, theorem35_check, u_alpha)
from opcert.cutoffs import CutoffValue, turan_cutoff_set

A0 = Fraction(0)
A1 = Fraction(1)


def test_u_alpha_values(table):
    u4 = u_alpha(table, 4, A0, 192).u
    assert u4.lo < Fraction("1.009273") and u4.hi > Fraction("1.009272")
    u3 = u_alpha(table, 3, A0, 192).u
    assert u3.hi < 1


def test_s_bounds_hold_on_samples(table):
    for n in (1, 10, 100, 1000, 3000):
        assert s_bounds_check(table, n, "plus", 320) == "Holds"
    for n in (2, 10, 100, 1000, 3000):
        assert s_bounds_check(table, n, "minus", 320) == "Holds"


def test_power_quotient_below_cutoff_raises():
    with pytest.raises(HypothesisError):
        power_quotient_check(100, A1, 256)
    res = power_quotient_check(100, A1, 256, force=True)
    assert not res.in_cutoff


def test_power_quotient_at_cutoff():
    res = power_quotient_check(5505, A1, 384)
    assert res.verdict == "Holds" and res.in_cutoff


def test_pbar_power_check(table):
    for n in (2, 50, 687, 3000):
        assert pbar_power_check(table, n, 320) == "Holds"


def test_theorem35_at_cutoff(table):
    for alpha in (A0, A1):
        res = theorem35_check(table, 5505, alpha, 384)
        assert res.verdict == "Holds"
        assert set(res.verdicts) == {"lower", "upper", "lower_shift", "upper_shift"}


def test_identity_residual_tiny():
    for n in (10, 100, 1000):
        for alpha in (A0, A1, Fraction(5, 2)):
            resid = m_polynomials(n, alpha, 256).identity_residual
            assert resid.lo <= 0 <= resid.hi
            assert resid.width() < Fraction(1, 10**20)


def test_identity_structure():
    # M2 - 4 M1 equals 225 pi^2 / (64 n^7): check magnitude directly at n=10
    mp = m_polynomials(10, A0, 256)
    target = 225 * ipow(pi_interval(256), 2) / (64 * 10**7)
    diff = mp.M2 - 4 * mp.M1 - target
    assert diff.lo <= 0 <= diff.hi


def test_error_terms_under_caps():
    for n in (5505, 10**6):
        rec = error_term_bounds(n, A0, 320)
        assert rec["E1_cross_ok"] and rec["E2_linear_ok"]


def test_starred_bounds_approach_one():
    sb = starred_bounds(10**6, A0, 320)
    for key in ("Ustar", "Lstar", "U1star", "L1star"):
        gap = abs(sb[key] - 1)
        assert gap.hi < Fraction(1, 10**12)


def test_starred_refinement_at_astronomical_cutoff():
    cuts = turan_cutoff_set(A0, 320)
    res = starred_refinement_check(cuts.n_u, A0, 320)
    assert all(v is Tri.LESS for v in res.values())


def test_reverse_turan_and_cubic(table):
    rep = reverse_turan_check(table, 4, A0, 256)
    assert rep.verdict == "Holds"
    assert rep.hypothesis == "Holds"
    assert rep.cubic_class == "OneRealTwoComplex"
    assert rep.lhs.hi < rep.rhs.lo
    # the published sample magnitudes
    assert rep.lhs.lo > Fraction("0.000124") and rep.lhs.hi < Fraction("0.000125")
    assert rep.rhs.lo > Fraction("0.000160") and rep.rhs.hi < Fraction("0.000161")


def test_reverse_turan_hypothesis_blocked_small(table):
    rep3 = reverse_turan_check(table, 3, A0, 256)
    assert rep3.hypothesis == "Fails"


def test_jensen_cubic_small(table):
    assert jensen_cubic_classify(table, 4, A0, 256) == "OneRealTwoComplex"
