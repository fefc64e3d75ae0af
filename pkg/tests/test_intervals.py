"""Soundness of the directed-rounded interval layer."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opcert.intervals import (CertInterval, DomainError, Tri, cos_pi_rational,
                              iexp, ilog, ipow, isqrt, pi_interval, pochhammer,
                              sin_pi_rational, tri_compare, with_refinement)

finite = st.floats(allow_nan=False, allow_infinity=False,
                   min_value=-1e6, max_value=1e6)


def contains(iv, x):
    return iv.lo <= x <= iv.hi


def test_from_exact_int():
    iv = CertInterval.from_exact(7, 128)
    assert iv.lo == iv.hi == 7


def test_from_exact_fraction_is_enclosed():
    third = Fraction(1, 3)
    iv = CertInterval.from_exact(third, 128)
    assert iv.lo < third < iv.hi
    assert float(iv.hi) - float(iv.lo) < 1e-30


def test_pi_interval_contains_pi():
    iv = pi_interval(128)
    below = Fraction(3141592653589793238462643383279502884197, 10**39)
    above = below + Fraction(2, 10**39)
    lo, hi = iv.to_fractions()
    assert lo < above and below < hi
    assert lo < hi


def test_negation_is_exact_at_high_precision():
    # negation must not round the endpoints back to machine precision
    x = iexp(CertInterval.from_exact(1, 256))
    xlo, xhi = x.to_fractions()
    ylo, yhi = (-x).to_fractions()
    assert ylo == -xhi and yhi == -xlo


@given(a=finite, b=finite, c=finite, d=finite)
@settings(max_examples=200)
def test_arithmetic_containment(a, b, c, d):
    lo1, hi1 = sorted((a, b))
    lo2, hi2 = sorted((c, d))
    x = CertInterval.hull(CertInterval.from_exact(Fraction(lo1), 128),
                          CertInterval.from_exact(Fraction(hi1), 128))
    y = CertInterval.hull(CertInterval.from_exact(Fraction(lo2), 128),
                          CertInterval.from_exact(Fraction(hi2), 128))
    for op in ("add", "sub", "mul"):
        z = {"add": x + y, "sub": x - y, "mul": x * y}[op]
        for p in (lo1, hi1):
            for q in (lo2, hi2):
                true = {"add": Fraction(p) + Fraction(q),
                        "sub": Fraction(p) - Fraction(q),
                        "mul": Fraction(p) * Fraction(q)}[op]
                assert z.contains(true)


@given(x=st.floats(min_value=0.01, max_value=100))
@settings(max_examples=100)
def test_exp_log_roundtrip(x):
    q = Fraction(x).limit_denominator(10**9)
    back = iexp(ilog(CertInterval.from_exact(q, 192)))
    assert back.contains(q)


def test_log_rejects_nonpositive():
    with pytest.raises(DomainError):
        ilog(CertInterval.from_exact(0, 128))


def test_sqrt_matches_integer_squares():
    for k in (1, 4, 9, 144, 10**6):
        iv = isqrt(CertInterval.from_exact(k, 192))
        assert contains(iv, math.isqrt(k))


def test_ipow_integer_and_rational():
    x = CertInterval.from_exact(2, 192)
    assert contains(ipow(x, 10), 1024)
    lo, hi = ipow(x, Fraction(1, 2)).to_fractions()
    assert lo * lo <= 2 <= hi * hi


def test_cos_sin_pi_rational_special_values():
    assert contains(cos_pi_rational(Fraction(0), 128), 1)
    assert contains(cos_pi_rational(Fraction(1), 128), -1)
    assert contains(sin_pi_rational(Fraction(1, 2), 128), 1)
    third = cos_pi_rational(Fraction(1, 3), 128)
    assert third.lo <= Fraction(1, 2) <= third.hi


def test_pochhammer_values():
    assert pochhammer(Fraction(1, 2), 0) == 1
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)


def test_tri_compare_verdicts():
    a = CertInterval.from_exact(1, 128)
    b = CertInterval.from_exact(2, 128)
    wide = CertInterval(0, 3, 128)
    assert tri_compare(a, b) is Tri.LESS
    assert tri_compare(b, a) is Tri.GREATER
    assert tri_compare(a, wide) is Tri.UNDETERMINED


def test_with_refinement_resolves_close_comparison():
    # 1 vs 1 + 2^-200 needs more than the starting precision to separate
    tiny = Fraction(1) + Fraction(1, 2**200)

    def check(bits):
        return tri_compare(CertInterval.from_exact(1, bits),
                           CertInterval.from_exact(tiny, bits))

    assert with_refinement(check) is Tri.LESS
