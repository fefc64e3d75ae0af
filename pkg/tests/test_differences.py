"""Signed differences, the H/G split, the U/L sandwich, and the main theorem."""

from fractions import Fraction

import pytest

from opcert.differences import (C_r, C_r_alpha, G_value, H_value,
                                HypothesisError, S_seq, UL_lemma24,
                                asymptote_scan, corollary_checks,
                                forward_difference, hg_parts, lemma24_min_n,
                                signed_diff_log, signed_forward_difference,
                                verify_theorem14)
from opcert.intervals import CertInterval, Tri, ipow, pochhammer, tri_compare

A0 = Fraction(0)


def const(n):
    return CertInterval.from_exact(5, 160)


def cubic(n):
    return CertInterval.from_exact(n**3, 160)


def test_forward_difference_annihilates_polynomials():
    # Delta^r of a degree-(r-1) polynomial vanishes; Delta^3 n^3 = 3! = 6
    d = forward_difference(cubic, 3, 10)
    assert d.lo <= 6 <= d.hi
    d4 = forward_difference(cubic, 4, 10)
    assert d4.lo <= 0 <= d4.hi
    d0 = forward_difference(const, 2, 3)
    assert d0.lo <= 0 <= d0.hi


def test_signed_difference_sign_convention():
    # (-1)^r Delta^r: for r=1 it is f(n) - f(n+1)
    f = lambda n: CertInterval.from_exact(n, 160)
    d = signed_forward_difference(f, 1, 7)
    assert d.lo <= -1 <= d.hi


def test_second_difference_example(table):
    # exact second difference of log rbar_0 at n = 4 from pbar in {14,24,40}:
    # log40/6 - 2 log24/5 + log14/4 = 0.00335604...
    dv = signed_diff_log(table, 4, 2, A0, 192)
    assert dv.value.lo < Fraction("0.00335605") and dv.value.hi > Fraction("0.00335604")


def test_second_difference_negative_at_two(table):
    # the forward window {2,3,4} shows the convexity failure at center 3
    dv = signed_diff_log(table, 2, 2, A0, 192)
    assert dv.value.hi < 0


def test_h_plus_g_decomposition(table):
    # the two-part split must recover the directly-differenced value
    for n, r in ((100, 2), (150, 3)):
        parts = hg_parts(table, n, r, A0, 256)
        total = parts.H + parts.G
        direct = signed_diff_log(table, n, r, A0, 256)
        assert total.lo <= direct.value.hi and direct.value.lo <= total.hi


def test_g_bound(table):
    for r, start in ((2, 132), (3, 305)):
        for n in (start, start + 100, 2000):
            g = abs(G_value(table, n, r, 256))
            bound = 1 / ipow(CertInterval.from_exact(n, 256),
                             Fraction(2 * r + 3, 2))
            assert tri_compare(g, bound) is Tri.LESS


def test_constants_S_and_C():
    assert S_seq(1) == 1 and S_seq(2) == 3 and S_seq(3) == 11
    c2 = C_r(2, 160)
    # C(2) = pi * (1/2)(3/2) = 3 pi / 4
    lo, hi = (c2 / Fraction(3, 4)).to_fractions()
    assert lo < Fraction("3.14159266") and hi > Fraction("3.14159265")
    ca = C_r_alpha(2, A0, 160)
    # (0+1)*2! + 1!*log8 + 1 = 3 + log 8
    assert ca.lo > 5 and ca.hi < Fraction("5.08")


def test_sandwich_orders_L_H_U(table):
    for n in (200, 1000, 3000):
        L, U = UL_lemma24(n, 2, A0, 256)
        h = H_value(n, 2, A0, 256)
        assert tri_compare(L, h) is Tri.LESS
        assert tri_compare(h, U) is Tri.LESS


def test_sandwich_rejects_below_minimum():
    with pytest.raises(HypothesisError):
        UL_lemma24(2, 2, A0, 160)


def test_theorem_holds_at_cutoff(table):
    rep = verify_theorem14(table, 5505, 2, A0, 384, n_cutoff=5505)
    assert rep.verdict == "Holds" and rep.in_cutoff
    rep3 = verify_theorem14(table, 5505, 3, Fraction(1), 384)
    assert rep3.verdict == "Holds"


def test_theorem_below_cutoff_not_asserted(table):
    rep = verify_theorem14(table, 10, 2, A0, 256, n_cutoff=5505)
    assert not rep.in_cutoff


def test_asymptote_scan_approaches_limit(table):
    scan = dict(asymptote_scan(table, 2, A0, [1000, 4000], 256))
    limit = C_r(2, 256)
    gap1 = abs(scan[1000] - limit).hi
    gap4 = abs(scan[4000] - limit).hi
    assert gap4 < gap1
    assert gap4 < Fraction(1, 2)


def test_corollary_checks(table):
    assert corollary_checks(table, 3, A0, 192).convexity is Tri.GREATER
    assert corollary_checks(table, 4, A0, 192).convexity is Tri.LESS
    rec = corollary_checks(table, 100, A0, 192)
    assert rec.convexity is Tri.LESS and rec.delta3_negative is Tri.LESS


def test_lemma24_min_n_small_cases():
    # ceil(e^{S_r/r!}): r=2 -> ceil(e^{3/2}) = 5, r=3 -> ceil(e^{11/6}) = 7
    assert lemma24_min_n(2) == 5
    assert lemma24_min_n(3) == 7
