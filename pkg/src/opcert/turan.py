"""Ratio bounds and the reverse cubic inequality for the scaled root sequence.

Covers the one-step root-ratio expansions, the power-quotient and root-power
bounds, the four-sided ratio sandwich, the starred refinements and their
coefficient families, the exact quadratic-form identity, and the reverse
higher-order inequality with Jensen cubic classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import coefficients as coef
from .cutoffs import CutoffValue, n_tilde
from .differences import HypothesisError
from .intervals import (
    MIN_BITS,
    CertInterval,
    Tri,
    iexp,
    ilog,
    ipow,
    pi_interval,
    tri_compare,
)
from .overpartitions import OverpartitionTable, log_r_alpha

__all__ = [
    "RatioU",
    "TuranReport",
    "CubicClass",
    "u_alpha",
    "s_bounds_check",
    "power_quotient_check",
    "pbar_power_check",
    "theorem35_check",
    "starred_bounds",
    "starred_refinement_check",
    "m_polynomials",
    "error_term_bounds",
    "reverse_turan_check",
    "jensen_cubic_classify",
    "log_linear_vs_root_check",
]


@dataclass(frozen=True)
class RatioU:
    n: int
    alpha: Fraction
    u: CertInterval


def u_alpha(table: OverpartitionTable, n: int, alpha: Fraction,
            bits: int = MIN_BITS) -> RatioU:
    """r_alpha(n-1) r_alpha(n+1) / r_alpha(n)^2 via exponentiated log values."""
    if n < 2:
        raise ValueError("u_alpha needs n >= 2")
    logs = (log_r_alpha(table, n - 1, alpha, bits)
            + log_r_alpha(table, n + 1, alpha, bits)
            - 2 * log_r_alpha(table, n, alpha, bits))
    return RatioU(n=n, alpha=Fraction(alpha), u=iexp(logs))


def _verdict(*checks: Tri) -> str:
    if all(c is Tri.LESS for c in checks):
        return "Holds"
    if any(c is Tri.GREATER for c in checks):
        return "Fails"
    return "Undetermined"


def s_bounds_check(table: OverpartitionTable, n: int, side: str,
                   bits: int = MIN_BITS) -> str:
    """Root-ratio sandwich: s(n) plus explicit n^-5 margins encloses the ratio."""
    n_iv = CertInterval.from_exact(n, bits)
    margin5 = 1 / ipow(n_iv, 5)
    if side == "plus":
        if n < 1:
            raise ValueError("plus side needs n >= 1")
        ratio = iexp((table.log_pbar(n + 1, bits) - table.log_pbar(n, bits)) / (n + 1))
        center = coef.s_plus_poly().evaluate(n, Fraction(0), bits)
        lo, hi = center - 120 * margin5, center + 850 * margin5
    elif side == "minus":
        if n < 2:
            raise ValueError("minus side needs n >= 2")
        ratio = iexp((table.log_pbar(n - 1, bits) - table.log_pbar(n, bits)) / (n - 1))
        center = coef.s_minus_poly().evaluate(n, Fraction(0), bits)
        lo, hi = center - 110 * margin5, center + 200 * margin5
    else:
        raise ValueError("side must be 'plus' or 'minus'")
    return _verdict(tri_compare(lo, ratio), tri_compare(ratio, hi))


@dataclass(frozen=True)
class CheckResult:
    n: int
    alpha: Fraction
    verdict: str
    in_cutoff: bool


def power_quotient_check(n: int, alpha: Fraction, bits: int = MIN_BITS,
                         force: bool = False) -> CheckResult:
    """n^(2a/n) / ((n-1)^(a/(n-1)) (n+1)^(a/(n+1))) against its two-sided bound."""
    cutoff = n_tilde(alpha)
    in_cutoff = n >= cutoff
    if not in_cutoff and not force:
        raise HypothesisError(f"n={n} below cutoff {cutoff}")
    n_iv = CertInterval.from_exact(n, bits)
    ln_n = ilog(n_iv)
    mid = iexp(2 * alpha * ln_n / n
               - alpha * ilog(CertInterval.from_exact(n - 1, bits)) / (n - 1)
               - alpha * ilog(CertInterval.from_exact(n + 1, bits)) / (n + 1))
    main = 1 + (3 * alpha - 2 * alpha * ln_n) / ipow(n_iv, 3)
    lo = main - coef.two_power(7 * alpha + 14, bits) * ln_n / ipow(n_iv, 5)
    hi = main + coef.two_power(18 * alpha + 31, bits) / ipow(n_iv, 5)
    verdict = _verdict(tri_compare(lo, mid), tri_compare(mid, hi))
    return CheckResult(n=n, alpha=Fraction(alpha), verdict=verdict, in_cutoff=in_cutoff)


def pbar_power_check(table: OverpartitionTable, n: int, bits: int = MIN_BITS) -> str:
    """p(n)^(2/(n(n-1)(n+1))) between its explicit lower and upper expansions."""
    if n < 2:
        raise ValueError("needs n >= 2")
    val = iexp(2 * table.log_pbar(n, bits) / (n * (n - 1) * (n + 1)))
    lo = coef.l_plus_poly().evaluate(n, Fraction(0), bits)
    hi = coef.u_plus_poly().evaluate(n, Fraction(0), bits)
    return _verdict(tri_compare(lo, val), tri_compare(val, hi))


@dataclass(frozen=True)
class RatioSandwich:
    n: int
    alpha: Fraction
    L: CertInterval
    U: CertInterval
    L1: CertInterval
    U1: CertInterval
    verdicts: dict
    in_cutoff: bool

    @property
    def verdict(self) -> str:
        vs = set(self.verdicts.values())
        if vs == {"Holds"}:
            return "Holds"
        if "Fails" in vs:
            return "Fails"
        return "Undetermined"


def theorem35_check(table: OverpartitionTable, n: int, alpha: Fraction,
                    bits: int = MIN_BITS, force: bool = False) -> RatioSandwich:
    """L < u(n) < U and L1 < u(n+1) < U1 with all four bound functions at n."""
    cutoff = n_tilde(alpha)
    in_cutoff = n >= cutoff
    if not in_cutoff and not force:
        raise HypothesisError(f"n={n} below cutoff {cutoff}")
    u_n = u_alpha(table, n, alpha, bits).u
    u_n1 = u_alpha(table, n + 1, alpha, bits).u
    L = coef.ratio_lower_poly().evaluate(n, alpha, bits)
    U = coef.ratio_upper_poly().evaluate(n, alpha, bits)
    L1 = coef.ratio_lower_shift_poly().evaluate(n, alpha, bits)
    U1 = coef.ratio_upper_shift_poly().evaluate(n, alpha, bits)
    verdicts = {
        "lower": _verdict(tri_compare(L, u_n)),
        "upper": _verdict(tri_compare(u_n, U)),
        "lower_shift": _verdict(tri_compare(L1, u_n1)),
        "upper_shift": _verdict(tri_compare(u_n1, U1)),
    }
    return RatioSandwich(n=n, alpha=Fraction(alpha), L=L, U=U, L1=L1, U1=U1,
                         verdicts=verdicts, in_cutoff=in_cutoff)


# -- starred refinements ---------------------------------------------------------


def _c_sum(family: int, n: int, alpha: Fraction, bits: int) -> CertInterval:
    n_iv = CertInterval.from_exact(n, bits)
    ln_n = ilog(n_iv)
    total = CertInterval.from_exact(0, bits)
    for k in range(5):
        total = total + (coef.c_coeff(family, k, alpha, ln_n, bits)
                         / ipow(n_iv, Fraction(k, 2)))
    return total / ipow(n_iv, Fraction(5, 2))


def starred_bounds(n: int, alpha: Fraction, bits: int = MIN_BITS) -> dict:
    """The four refined bound functions 1 + c-sum +/- n^(-19/4) at integer n."""
    n_iv = CertInterval.from_exact(n, bits)
    slack = 1 / ipow(n_iv, Fraction(19, 4))
    s1 = _c_sum(1, n, alpha, bits)
    s2 = _c_sum(2, n, alpha, bits)
    return {
        "Ustar": 1 + s1 + slack,
        "Lstar": 1 + s1 - slack,
        "U1star": 1 + s2 + slack,
        "L1star": 1 + s2 - slack,
    }


def log_linear_vs_root_check(a: CertInterval, b: CertInterval, n: CutoffValue,
                             exponent: Fraction, bits: int = MIN_BITS) -> Tri:
    """Certify a + b*log n < n^exponent, with n possibly in exp form.

    Compared in log-domain: when the left side is positive the inequality is
    equivalent to log(a + b*log n) < exponent * log n, which stays finite even
    for n far beyond integer range.
    """
    ln_n = n.ln(bits)
    lhs = a + b * ln_n
    if lhs.hi < 0:
        return Tri.LESS  # right side is positive for any n >= 1
    if not lhs.is_positive():
        return Tri.UNDETERMINED
    return tri_compare(ilog(lhs), Fraction(exponent) * ln_n)


def starred_refinement_check(n: CutoffValue, alpha: Fraction,
                             bits: int = MIN_BITS) -> dict:
    """Certify bound < starred-bound (or >) for all four pairs at huge n.

    The unstarred and starred bounds share every term except the n^-5 tail
    a + b*log n versus n^(-19/4), so each comparison reduces exactly to
    a + b*log n < n^(1/4).
    """
    pairs = coef.refinement_pairs(alpha, bits)
    return {name: log_linear_vs_root_check(a, b, n, Fraction(1, 4), bits)
            for name, (a, b) in pairs.items()}


# -- quadratic-form expansion ----------------------------------------------------


@dataclass(frozen=True)
class MPolyValues:
    n: int
    alpha: Fraction
    M1: CertInterval
    M2: CertInterval
    identity_residual: CertInterval


def m_polynomials(n: int, alpha: Fraction, bits: int = MIN_BITS) -> MPolyValues:
    """M1, M2 and the residual of M2 - 4 M1 = 225 pi^2 / (64 n^7)."""
    if n < 2:
        raise ValueError("needs n >= 2")
    n_iv = CertInterval.from_exact(n, bits)
    ln_n = ilog(n_iv)
    c1 = [coef.c_coeff(1, k, alpha, ln_n, bits) for k in range(5)]
    c2 = [coef.c_coeff(2, k, alpha, ln_n, bits) for k in range(5)]
    d = [coef.d_coeff(k, alpha, ln_n, bits) for k in range(10)]
    m1 = CertInterval.from_exact(0, bits)
    m2 = CertInterval.from_exact(0, bits)
    for k in range(5):
        root_pow = ipow(n_iv, Fraction(k, 2))
        s1 = CertInterval.from_exact(0, bits)
        s2 = CertInterval.from_exact(0, bits)
        for m in range(k + 1):
            s1 = s1 + c1[m] * c2[k - m]
            s2 = s2 + d[m] * d[k - m]
        m1 = m1 + s1 / root_pow
        m2 = m2 + s2 / root_pow
    n5 = ipow(n_iv, 5)
    m1, m2 = m1 / n5, m2 / n5
    target = 225 * ipow(pi_interval(bits), 2) / (64 * ipow(n_iv, 7))
    return MPolyValues(n=n, alpha=Fraction(alpha), M1=m1, M2=m2,
                       identity_residual=m2 - 4 * m1 - target)


def error_term_bounds(n: int, alpha: Fraction, bits: int = MIN_BITS) -> dict:
    """Cross-product error terms against term-count x coefficient-cap bounds.

    The caps use the certified maxima of |c_k| and |d_k| at this n (the
    blanket cap n^(1/16) only takes over at cutoffs far beyond table range).
    """
    n_iv = CertInterval.from_exact(n, bits)
    ln_n = ilog(n_iv)
    c1 = [coef.c_coeff(1, k, alpha, ln_n, bits) for k in range(5)]
    c2 = [coef.c_coeff(2, k, alpha, ln_n, bits) for k in range(5)]
    d = [coef.d_coeff(k, alpha, ln_n, bits) for k in range(10)]

    e11 = CertInterval.from_exact(0, bits)  # cross terms of the product expansion
    for k in range(4):
        for m in range(k, 4):
            e11 = e11 + (c1[m + 1] * c2[4 + k - m]) / ipow(n_iv, Fraction(k, 2))
    e11 = e11 / ipow(n_iv, Fraction(15, 2))

    d_sum = CertInterval.from_exact(0, bits)  # linear d-term of the square expansion
    for k in range(10):
        d_sum = d_sum + d[k] / ipow(n_iv, Fraction(k, 2))
    e23 = 6 * d_sum / ipow(n_iv, Fraction(29, 4))

    c_max = abs(c1[0])
    for iv in c1 + c2:
        a = abs(iv)
        if a.hi > c_max.hi:
            c_max = a
    d_max = abs(d[0])
    for iv in d:
        a = abs(iv)
        if a.hi > d_max.hi:
            d_max = a

    bound11 = 10 * c_max * c_max / ipow(n_iv, Fraction(15, 2))
    bound23 = 60 * d_max / ipow(n_iv, Fraction(29, 4))
    return {
        "E1_cross": e11,
        "E1_cross_bound": bound11,
        "E1_cross_ok": bool(abs(e11).hi <= bound11.hi),
        "E2_linear": e23,
        "E2_linear_bound": bound23,
        "E2_linear_ok": bool(abs(e23).hi <= bound23.hi),
    }


# -- the reverse inequality and the Jensen cubic ----------------------------------


class CubicClass:
    ONE_REAL_TWO_COMPLEX = "OneRealTwoComplex"
    THREE_REAL = "ThreeReal"
    DEGENERATE = "Degenerate"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class TuranReport:
    n: int
    alpha: Fraction
    lhs: CertInterval
    rhs: CertInterval
    verdict: str
    cubic_class: str
    hypothesis: str  # both ratio quotients certified > 1 at n and n+1


def _r_values(table: OverpartitionTable, ns: range, alpha: Fraction,
              bits: int) -> list[CertInterval]:
    return [iexp(log_r_alpha(table, m, alpha, bits)) for m in ns]


def reverse_turan_check(table: OverpartitionTable, n: int, alpha: Fraction,
                        bits: int = MIN_BITS) -> TuranReport:
    """Strict reverse quartic inequality, certified in both equivalent forms."""
    if n < 2:
        raise ValueError("needs n >= 2")
    u_n = u_alpha(table, n, alpha, bits).u
    u_n1 = u_alpha(table, n + 1, alpha, bits).u
    lhs = 4 * (1 - u_n) * (1 - u_n1)
    rhs = ipow_safe_square(1 - u_n * u_n1)
    verdict_u = _verdict(tri_compare(lhs, rhs))

    a0, a1, a2, a3 = _r_values(table, range(n - 1, n + 3), alpha, bits)
    quartic = (4 * (a1 * a1 - a0 * a2) * (a2 * a2 - a1 * a3)
               - ipow_safe_square(a1 * a2 - a0 * a3))
    verdict_r = _verdict(tri_compare(quartic, CertInterval.from_exact(0, bits)))
    if {verdict_u, verdict_r} == {"Holds", "Fails"}:
        raise AssertionError(
            f"equivalent forms disagree at n={n}: {verdict_u} vs {verdict_r}")
    verdict = verdict_u if verdict_u == verdict_r else "Undetermined"
    one = CertInterval.from_exact(1, bits)
    hypothesis = _verdict(tri_compare(one, u_n), tri_compare(one, u_n1))
    cubic = jensen_cubic_classify(table, n, alpha, bits)
    return TuranReport(n=n, alpha=Fraction(alpha), lhs=lhs, rhs=rhs,
                       verdict=verdict, cubic_class=cubic, hypothesis=hypothesis)


def ipow_safe_square(x: CertInterval) -> CertInterval:
    """x*x tightened to use |x| (interval square, not product of copies)."""
    a = abs(x)
    return a * a


def jensen_cubic_classify(table: OverpartitionTable, n: int, alpha: Fraction,
                          bits: int = MIN_BITS) -> str:
    """Sign of the discriminant of sum_j binom(3,j) r_alpha(n-1+j) x^j."""
    v = _r_values(table, range(n - 1, n + 3), alpha, bits)
    d_, c_, b_, a_ = v[0], 3 * v[1], 3 * v[2], v[3]  # a x^3 + b x^2 + c x + d
    disc = (18 * a_ * b_ * c_ * d_ - 4 * ipow(b_, 3) * d_
            + ipow_safe_square(b_ * c_) - 4 * a_ * ipow(c_, 3)
            - 27 * ipow_safe_square(a_ * d_))
    sign = tri_compare(disc, CertInterval.from_exact(0, bits))
    if sign is Tri.LESS:
        return CubicClass.ONE_REAL_TWO_COMPLEX
    if sign is Tri.GREATER:
        return CubicClass.THREE_REAL
    if disc.lo == disc.hi:
        return CubicClass.DEGENERATE
    return CubicClass.UNDETERMINED
