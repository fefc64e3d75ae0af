"""Forward differences of log r_alpha(n) and their certified bounds.

Delta is the forward difference Delta f(n) = f(n+1) - f(n); its r-fold
application is expanded with exact binomials.  The signed quantity
(-1)^r Delta^r log r_alpha(n) decomposes as H_{r,alpha}(n) + G_r(n), where H
collects the four explicit summands of log r_alpha coming from the main term
and G is the remainder contribution.  H is sandwiched by the explicit bound
functions L and U (with an infinite series truncated under a rigorous
geometric tail bound), which yields the symmetric log-bounds

    0 < log(1 + C(r)/n^(r+1/2) - C(r,alpha)/n^(r+3/4))
      < (-1)^r Delta^r log r_alpha(n)
      < log(1 + C(r)/n^(r+1/2)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .intervals import (
    MIN_BITS,
    CertInterval,
    DomainError,
    Tri,
    iexp,
    ilog,
    ipow,
    isqrt,
    pi_interval,
    pochhammer,
    tri_compare,
)
from .overpartitions import OverpartitionTable, log_r_alpha
from .zuckerman import log_pbar_over_That

__all__ = [
    "HypothesisError",
    "DiffValue",
    "SandwichReport",
    "HGParts",
    "forward_difference",
    "signed_diff_log",
    "H_value",
    "G_value",
    "UL_lemma24",
    "verify_theorem14",
    "asymptote_scan",
    "corollary_checks",
    "C_r",
    "C_r_alpha",
    "S_seq",
]


class HypothesisError(ValueError):
    """n is below the hypothesis cutoff of the lemma being applied."""


def forward_difference(f: Callable[[int], CertInterval], r: int, n: int) -> CertInterval:
    """Delta^r f(n) = sum_i (-1)^(r-i) binom(r,i) f(n+i), exact binomials."""
    if r < 0:
        raise DomainError("difference order must be >= 0")
    acc: CertInterval | None = None
    for i in range(r + 1):
        coeff = math.comb(r, i) * (-1 if (r - i) % 2 else 1)
        term = f(n + i) * coeff
        acc = term if acc is None else acc + term
    return acc


def signed_forward_difference(f: Callable[[int], CertInterval], r: int, n: int) -> CertInterval:
    """(-1)^r Delta^r f(n)."""
    d = forward_difference(f, r, n)
    return -d if r % 2 else d


@dataclass(frozen=True)
class DiffValue:
    n: int
    r: int
    alpha: Fraction
    value: CertInterval


def signed_diff_log(table: OverpartitionTable, n: int, r: int, alpha: Fraction,
                    bits: int = MIN_BITS) -> DiffValue:
    """Enclosure of (-1)^r Delta^r log r_alpha(n); needs the table up to n+r."""
    if n < 1:
        raise DomainError("signed_diff_log needs n >= 1")
    if n + r > table.max_n:
        raise IndexError(f"table covers 0..{table.max_n}, need {n + r}")
    val = signed_forward_difference(lambda m: log_r_alpha(table, m, alpha, bits), r, n)
    return DiffValue(n=n, r=r, alpha=Fraction(alpha), value=val)


# -- H and G (series main-term decomposition) ---------------------------------


def _h_summand(n: int, alpha: Fraction, bits: int) -> CertInterval:
    """mu/n - (alpha+1) log n / n + (log(mu-1) - log mu)/n - log 8 / n."""
    n_iv = CertInterval.from_exact(n, bits)
    mu = pi_interval(bits) * isqrt(n_iv)
    log8 = ilog(CertInterval.from_exact(8, bits))
    out = mu - (alpha + 1) * ilog(n_iv) + ilog(mu - 1) - ilog(mu) - log8
    return out / n


def H_value(n: int, r: int, alpha: Fraction, bits: int = MIN_BITS) -> CertInterval:
    if n < 1:
        raise DomainError("H_value needs n >= 1 (mu(n) > 1)")
    return signed_forward_difference(lambda m: _h_summand(m, alpha, bits), r, n)


def G_value(table: OverpartitionTable, n: int, r: int, bits: int = MIN_BITS) -> CertInterval:
    """(-1)^r Delta^r of (1/n) log(1 + Rhat/That), remainder from the exact table."""
    if n < 1:
        raise DomainError("G_value needs n >= 1")
    return signed_forward_difference(
        lambda m: log_pbar_over_That(table, m, bits) / m, r, n)


# -- named constants of the sandwich -------------------------------------------


def S_seq(r: int) -> int:
    """S_0 = 0, S_n = n S_(n-1) + (n-1)! (permutations with two cycles)."""
    s = 0
    for n in range(1, r + 1):
        s = n * s + math.factorial(n - 1)
    return s


def C_r(r: int, bits: int = MIN_BITS) -> CertInterval:
    """C(r) = pi * (1/2)_r."""
    return pi_interval(bits) * CertInterval.from_exact(pochhammer(Fraction(1, 2), r), bits)


def C_r_alpha(r: int, alpha: Fraction, bits: int = MIN_BITS) -> CertInterval:
    """C(r, alpha) = (alpha+1) r! + (r-1)! log 8 + 1."""
    log8 = ilog(CertInterval.from_exact(8, bits))
    return (CertInterval.from_exact((alpha + 1) * math.factorial(r), bits)
            + math.factorial(r - 1) * log8 + 1)


def lemma24_min_n(r: int) -> int:
    """Hypothesis cutoff ceil(e^(S_r/r!)) of the L/U sandwich for H."""
    x = Fraction(S_seq(r), math.factorial(r))
    # certified ceiling of e^x
    bits = MIN_BITS
    while True:
        e = iexp(CertInterval.from_exact(x, bits))
        lo, hi = e.to_fractions()
        if math.ceil(lo) == math.ceil(hi):
            return math.ceil(lo)
        bits *= 2


def _g2_series(m_iv: CertInterval, r: int, n: int, bits: int) -> CertInterval:
    """Enclosure of sum_{k>=1} (2/(k^2 pi^k)) (k/2)_r m^(-(k/2 + r + 1)).

    Truncated at K terms with a geometric tail: for k >= K the term ratio is
    at most (1 + 2r/K)/(pi sqrt(m)) < 1, so the tail is bounded by the next
    term over (1 - ratio).  [0, tail] is added to keep the enclosure valid.
    """
    pi = pi_interval(bits)
    K = max(2 * r + 2, math.ceil((bits + 16) * math.log(2) / math.log(math.pi * math.sqrt(n))))
    inv_sqrt_m = 1 / isqrt(m_iv)
    total = CertInterval.from_exact(0, bits)
    # m^-(k/2+r+1) built incrementally from powers of 1/sqrt(m)
    base = ipow(inv_sqrt_m, 2 * r + 2)
    power = base
    term = None
    for k in range(1, K + 1):
        power = power * inv_sqrt_m
        coeff = Fraction(2, k * k) * pochhammer(Fraction(k, 2), r)
        term = CertInterval.from_exact(coeff, bits) / ipow(pi, k) * power
        total = total + term
    ratio = CertInterval.from_exact(Fraction(K + 2 * r, K), bits) / (pi * isqrt(m_iv))
    if not ratio.hi < 1:
        raise DomainError("geometric tail ratio >= 1; m too small")
    tail_hi = (term * ratio / (1 - ratio)).hi
    tail = CertInterval(CertInterval.from_exact(0, bits).lo, tail_hi, bits)
    return total + tail


def UL_lemma24(n: int, r: int, alpha: Fraction, bits: int = MIN_BITS
               ) -> tuple[CertInterval, CertInterval]:
    """(L, U) bound functions sandwiching H_{r,alpha}(n); r >= 2 required."""
    if r < 2:
        raise DomainError("lemma sandwich needs r >= 2")
    if n < lemma24_min_n(r):
        raise HypothesisError(f"n={n} below hypothesis cutoff {lemma24_min_n(r)} for r={r}")
    n_iv = CertInterval.from_exact(n, bits)
    nr_iv = CertInterval.from_exact(n + r, bits)
    c = C_r(r, bits)
    log8 = ilog(CertInterval.from_exact(8, bits))
    rfact = math.factorial(r)
    s_r = S_seq(r)

    def tail_terms(m_iv: CertInterval) -> CertInterval:
        log_term = (alpha + 1) * (rfact * ilog(m_iv) - s_r) / ipow(m_iv, r + 1)
        return (_g2_series(m_iv, r, n, bits) + log_term
                + rfact * log8 / ipow(m_iv, r + 1))

    U = c / ipow(n_iv, Fraction(2 * r + 1, 2)) - tail_terms(nr_iv)
    L = c / ipow(nr_iv, Fraction(2 * r + 1, 2)) - tail_terms(n_iv)
    return L, U


# -- Theorem-level checks ------------------------------------------------------


@dataclass(frozen=True)
class SandwichReport:
    n: int
    r: int
    alpha: Fraction
    lower: CertInterval
    upper: CertInterval
    value: CertInterval
    verdict: str  # Holds | Fails | Undetermined
    in_cutoff: bool | None = None


def theorem14_bounds(n: int, r: int, alpha: Fraction, bits: int = MIN_BITS
                     ) -> tuple[CertInterval, CertInterval]:
    """(lower, upper) log-bounds of the sandwich theorem."""
    n_iv = CertInterval.from_exact(n, bits)
    main = C_r(r, bits) / ipow(n_iv, Fraction(2 * r + 1, 2))
    deficit = C_r_alpha(r, alpha, bits) / ipow(n_iv, Fraction(4 * r + 3, 4))
    lower_arg = 1 + main - deficit
    if not lower_arg.is_positive():
        raise DomainError("lower bound argument not certified positive")
    return ilog(lower_arg), ilog(1 + main)


def verify_theorem14(table: OverpartitionTable, n: int, r: int, alpha: Fraction,
                     bits: int = MIN_BITS, n_cutoff: int | None = None) -> SandwichReport:
    """Certified check of 0 < lower < value < upper at one (n, r, alpha)."""
    if r < 2:
        raise DomainError("theorem sandwich stated for r >= 2")
    lower, upper = theorem14_bounds(n, r, alpha, bits)
    value = signed_diff_log(table, n, r, alpha, bits).value
    zero = CertInterval.from_exact(0, bits)
    checks = [
        tri_compare(zero, lower),
        tri_compare(lower, value),
        tri_compare(value, upper),
    ]
    if all(c is Tri.LESS for c in checks):
        verdict = "Holds"
    elif any(c is Tri.GREATER for c in checks):
        verdict = "Fails"
    else:
        verdict = "Undetermined"
    in_cutoff = (n >= n_cutoff) if n_cutoff is not None else None
    return SandwichReport(n=n, r=r, alpha=Fraction(alpha), lower=lower, upper=upper,
                          value=value, verdict=verdict, in_cutoff=in_cutoff)


@dataclass(frozen=True)
class HGParts:
    n: int
    r: int
    alpha: Fraction
    H: CertInterval
    G: CertInterval


def hg_parts(table: OverpartitionTable, n: int, r: int, alpha: Fraction,
             bits: int = MIN_BITS) -> HGParts:
    return HGParts(n=n, r=r, alpha=Fraction(alpha),
                   H=H_value(n, r, alpha, bits),
                   G=G_value(table, n, r, bits))


def asymptote_scan(table: OverpartitionTable, r: int, alpha: Fraction,
                   ns: Sequence[int], bits: int = MIN_BITS
                   ) -> list[tuple[int, CertInterval]]:
    """n^(r+1/2) * (-1)^r Delta^r log r_alpha(n) for each n; limit is C(r)."""
    out = []
    for n in ns:
        scale = ipow(CertInterval.from_exact(n, bits), Fraction(2 * r + 1, 2))
        out.append((n, scale * signed_diff_log(table, n, r, alpha, bits).value))
    return out


@dataclass(frozen=True)
class CorollaryVerdicts:
    n: int
    alpha: Fraction
    convexity: Tri  # LESS means r_alpha(n)^2 < r_alpha(n-1) r_alpha(n+1)
    delta3_negative: Tri  # LESS means Delta^3 log r_alpha(n) < 0


def corollary_checks(table: OverpartitionTable, n: int, alpha: Fraction,
                     bits: int = MIN_BITS) -> CorollaryVerdicts:
    """Log-convexity at n and the sign of Delta^3 log r_alpha(n)."""
    if n < 2:
        raise DomainError("convexity check needs n >= 2")
    f = lambda m: log_r_alpha(table, m, alpha, bits)
    # r_alpha(n)^2 < r_alpha(n-1) r_alpha(n+1) iff Delta^2 log r_alpha(n-1) > 0
    convexity = tri_compare(2 * f(n), f(n - 1) + f(n + 1))
    d3 = forward_difference(f, 3, n)
    delta3 = tri_compare(d3, CertInterval.from_exact(0, bits))
    return CorollaryVerdicts(n=n, alpha=Fraction(alpha), convexity=convexity,
                             delta3_negative=delta3)
