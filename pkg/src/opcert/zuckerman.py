"""Truncated Zuckerman series with exact rational phases and Engel's bound.

The series is

    pbar(n) = (1/2pi) * sum_{k odd} sqrt(k) * sum_{h<k, (h,k)=1}
              (omega(h,k)^2/omega(2h,k)) e^(-2 pi i n h/k) d/dn(sinh(pi sqrt(n)/k)/sqrt(n))

with the derivative in closed form

    (pi/(2 k n)) cosh(pi sqrt(n)/k) - sinh(pi sqrt(n)/k) / (2 n^(3/2)).

All unit-modulus factors of one (h,k) term are combined into a single exact
rational multiple of pi before any trigonometric evaluation, so phases carry
zero rounding error.  The truncation error satisfies

    |R2(n,N)| < N^(5/2)/(pi n^(3/2)) * sinh(pi sqrt(n)/N).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .intervals import (
    MIN_BITS,
    CertInterval,
    DomainError,
    cos_pi_rational,
    icosh,
    iexp,
    ilog,
    ipow,
    isinh,
    isqrt,
    pi_interval,
    sin_pi_rational,
)
from .overpartitions import OverpartitionTable

__all__ = [
    "WidthError",
    "RationalPhase",
    "SeriesEnclosure",
    "MainTermSplit",
    "omega_phase",
    "truncated_series",
    "engel_error_bound",
    "certified_enclosure",
    "exact_from_series",
    "main_term_split",
]


class WidthError(RuntimeError):
    """The certified radius is too wide to pin down the integer."""


@dataclass(frozen=True)
class RationalPhase:
    """omega(h,k) = e^(pi i t) with exact rational t, reduced mod 2."""

    t: Fraction
    source: tuple[int, int]


def omega_phase(h: int, k: int) -> RationalPhase:
    """Exact phase of omega(h,k) = exp(pi i sum_r (r/k)(hr/k - floor(hr/k) - 1/2))."""
    if h < 0 or k < 1:
        raise DomainError("omega_phase needs h >= 0, k >= 1")
    t = Fraction(0)
    for r in range(1, k):
        frac_part = Fraction(h * r % k, k)
        t += Fraction(r, k) * (frac_part - Fraction(1, 2))
    t %= 2
    if t > 1:
        t -= 2
    return RationalPhase(t=t, source=(h, k))


def _term_phase(h: int, k: int, n: int) -> Fraction:
    """Combined phase t with omega(h,k)^2/omega(2h,k) * e^(-2 pi i n h/k) = e^(pi i t)."""
    t = 2 * omega_phase(h, k).t - omega_phase(2 * h, k).t - Fraction(2 * n * h, k)
    return t % 2


def _series_sum(n: int, N: int, bits: int) -> tuple[CertInterval, CertInterval]:
    """(real, imaginary) parts of the truncated sum; imaginary must enclose 0."""
    if n < 1:
        raise DomainError("series needs n >= 1")
    if N < 1:
        raise DomainError("series needs N >= 1")
    pi = pi_interval(bits)
    sqrt_n = isqrt(CertInterval.from_exact(n, bits))
    n_iv = CertInterval.from_exact(n, bits)
    real = CertInterval.from_exact(0, bits)
    imag = CertInterval.from_exact(0, bits)
    for k in range(1, N + 1, 2):
        arg = pi * sqrt_n / k
        # d/dn(sinh(pi sqrt n / k)/sqrt n), closed form
        deriv = pi / (2 * k * n_iv) * icosh(arg) - isinh(arg) / (2 * n_iv * sqrt_n)
        sqrt_k = isqrt(CertInterval.from_exact(k, bits))
        for h in range(k):
            if math.gcd(h, k) != 1:
                continue
            t = _term_phase(h, k, n)
            mag = sqrt_k * deriv
            real = real + mag * cos_pi_rational(t, bits)
            imag = imag + mag * sin_pi_rational(t, bits)
    scale = 1 / (2 * pi)
    return real * scale, imag * scale


def truncated_series(n: int, N: int, bits: int = MIN_BITS) -> CertInterval:
    real, imag = _series_sum(n, N, bits)
    if not imag.contains_zero():
        raise AssertionError(f"phase bug: imaginary part {imag} excludes 0")
    return real


def engel_error_bound(n: int, N: int, bits: int = MIN_BITS) -> CertInterval:
    """Enclosure of N^(5/2)/(pi n^(3/2)) sinh(pi sqrt(n)/N)."""
    if n < 1 or N < 1:
        raise DomainError("engel_error_bound needs n, N >= 1")
    pi = pi_interval(bits)
    n_iv = CertInterval.from_exact(n, bits)
    N_iv = CertInterval.from_exact(N, bits)
    return (ipow(N_iv, Fraction(5, 2)) / (pi * ipow(n_iv, Fraction(3, 2)))
            * isinh(pi * isqrt(n_iv) / N_iv))


@dataclass(frozen=True)
class SeriesEnclosure:
    n: int
    N: int
    partial: CertInterval
    err: CertInterval
    total: CertInterval


def certified_enclosure(n: int, N: int, bits: int = MIN_BITS) -> SeriesEnclosure:
    partial = truncated_series(n, N, bits)
    err = engel_error_bound(n, N, bits)
    total = CertInterval(
        (partial - err).lo,
        (partial + err).hi,
        partial.bits,
    )
    return SeriesEnclosure(n=n, N=N, partial=partial, err=err, total=total)


def exact_from_series(n: int, bits: int | None = None) -> int:
    """Recover pbar(n) exactly from the series, or raise WidthError.

    N is the smallest odd integer >= 1.3*sqrt(n); the certified radius drops
    below 1/2 around n ~ 2200, below which callers should use the table.
    """
    if n < 1:
        raise DomainError("exact_from_series needs n >= 1")
    N = max(1, math.ceil(1.3 * math.sqrt(n)))
    if N % 2 == 0:
        N += 1
    if bits is None:
        # pbar(n) ~ e^(pi sqrt n); need the integer part plus margin
        bits = max(MIN_BITS, int(math.pi * math.sqrt(n) / math.log(2)) + 96)
    enc = certified_enclosure(n, N, bits)
    if not enc.err.hi < Fraction(1, 2):
        raise WidthError(f"Engel radius {enc.err.hi} >= 1/2 at n={n}, N={N}")
    lo_frac, hi_frac = enc.total.to_fractions()
    lo_int = math.ceil(lo_frac)
    hi_int = math.floor(hi_frac)
    if lo_int != hi_int:
        raise WidthError(f"interval {enc.total} does not isolate one integer")
    return lo_int


@dataclass(frozen=True)
class MainTermSplit:
    n: int
    That: CertInterval
    Rhat: CertInterval


def T_hat(n: int, bits: int = MIN_BITS) -> CertInterval:
    """Main term (1/8n)(1 - 1/mu(n)) e^(mu(n)) with mu(n) = pi sqrt(n)."""
    if n < 1:
        raise DomainError("T_hat needs n >= 1")
    mu = pi_interval(bits) * isqrt(CertInterval.from_exact(n, bits))
    return (1 - 1 / mu) * iexp(mu) / (8 * n)


def main_term_split(table: OverpartitionTable, n: int, bits: int = MIN_BITS) -> MainTermSplit:
    """That from the closed form, Rhat = pbar(n) - That via the exact table."""
    that = T_hat(n, bits)
    rhat = CertInterval.from_exact(table[n], bits) - that
    return MainTermSplit(n=n, That=that, Rhat=rhat)


def log_pbar_over_That(table: OverpartitionTable, n: int, bits: int = MIN_BITS) -> CertInterval:
    """Enclosure of log(1 + Rhat/That) = log pbar(n) - log That(n)."""
    that = T_hat(n, bits)
    return table.log_pbar(n, bits) - ilog(that)
