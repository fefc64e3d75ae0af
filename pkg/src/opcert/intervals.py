"""Directed-rounded interval arithmetic on MPFR.

Every operation returns an interval that contains the exact mathematical
result for any points of the input intervals.  This is the only module that
touches rounding; everything downstream works with ``CertInterval`` values
and the three-valued comparison ``Tri``.

Notes on underflow: gmpy2/MPFR underflows below 2^-1073741823.  A positive
quantity that underflows rounds down to 0 and up to the smallest subnormal,
so enclosures stay valid (just wide).  Comparisons of astronomically small
quantities are therefore done in log-domain by callers, never here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Union

import gmpy2
from gmpy2 import mpfr, mpq

__all__ = [
    "CertInterval",
    "DomainError",
    "PrecisionCapError",
    "Tri",
    "MIN_BITS",
    "MAX_BITS",
    "pochhammer",
    "eval_elementary",
    "tri_compare",
    "pi_interval",
    "cos_pi_rational",
    "sin_pi_rational",
    "with_refinement",
]

MIN_BITS = 128
MAX_BITS = 16384

Scalar = Union[int, Fraction, "CertInterval"]


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class PrecisionCapError(RuntimeError):
    """A verdict stayed Undetermined at the precision cap."""


class Tri(enum.Enum):
    LESS = "Less"
    GREATER = "Greater"
    UNDETERMINED = "Undetermined"


@lru_cache(maxsize=None)
def _ctx_pair(bits: int):
    common = dict(precision=bits, emin=gmpy2.get_emin_min(), emax=gmpy2.get_emax_max())
    down = gmpy2.context(round=gmpy2.RoundDown, **common)
    up = gmpy2.context(round=gmpy2.RoundUp, **common)
    return down, up


@dataclass(frozen=True, slots=True)
class CertInterval:
    """Enclosure [lo, hi] of a real number at working precision ``bits``."""

    lo: mpfr
    hi: mpfr
    bits: int

    def __post_init__(self):
        if gmpy2.is_nan(self.lo) or gmpy2.is_nan(self.hi) or not self.lo <= self.hi:
            raise DomainError(f"invalid interval endpoints [{self.lo}, {self.hi}]")

    # -- construction -------------------------------------------------------

    @staticmethod
    def from_exact(x: Union[int, Fraction, mpq], bits: int = MIN_BITS) -> "CertInterval":
        down, up = _ctx_pair(bits)
        if isinstance(x, Fraction):
            x = mpq(x.numerator, x.denominator)
        lo = mpfr(x, context=down)
        hi = mpfr(x, context=up)
        return CertInterval(lo, hi, bits)

    @staticmethod
    def point(x: mpfr, bits: int) -> "CertInterval":
        return CertInterval(x, x, bits)

    @staticmethod
    def hull(a: "CertInterval", b: "CertInterval") -> "CertInterval":
        return CertInterval(min(a.lo, b.lo), max(a.hi, b.hi), max(a.bits, b.bits))

    # -- queries -------------------------------------------------------------

    def width(self) -> mpfr:
        _, up = _ctx_pair(self.bits)
        return up.sub(self.hi, self.lo)

    def mid(self) -> mpfr:
        down, _ = _ctx_pair(self.bits)
        return down.div(down.add(self.lo, self.hi), mpfr(2))

    def contains(self, x: Union[int, Fraction, mpq, "CertInterval"]) -> bool:
        if isinstance(x, CertInterval):
            return self.lo <= x.lo and x.hi <= self.hi
        if isinstance(x, Fraction):
            x = mpq(x.numerator, x.denominator)
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def is_positive(self) -> bool:
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0

    def to_fractions(self) -> tuple[Fraction, Fraction]:
        # mpfr -> mpq is exact for finite endpoints
        lo, hi = mpq(self.lo), mpq(self.hi)
        return Fraction(lo.numerator, lo.denominator), Fraction(hi.numerator, hi.denominator)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other: Scalar) -> "CertInterval":
        if isinstance(other, CertInterval):
            return other
        if isinstance(other, (int, Fraction)):
            return CertInterval.from_exact(other, self.bits)
        return NotImplemented

    def __add__(self, other: Scalar) -> "CertInterval":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        bits = max(self.bits, o.bits)
        down, up = _ctx_pair(bits)
        return CertInterval(down.add(self.lo, o.lo), up.add(self.hi, o.hi), bits)

    __radd__ = __add__

    def __neg__(self) -> "CertInterval":
        # bare "-x" would round to the active (default, 53-bit) context
        down, up = _ctx_pair(self.bits)
        return CertInterval(down.minus(self.hi), up.minus(self.lo), self.bits)

    def __sub__(self, other: Scalar) -> "CertInterval":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Scalar) -> "CertInterval":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "CertInterval":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        bits = max(self.bits, o.bits)
        down, up = _ctx_pair(bits)
        pairs = [(self.lo, o.lo), (self.lo, o.hi), (self.hi, o.lo), (self.hi, o.hi)]
        lo = min(down.mul(a, b) for a, b in pairs)
        hi = max(up.mul(a, b) for a, b in pairs)
        return CertInterval(lo, hi, bits)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "CertInterval":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.contains_zero():
            raise DomainError("division by an interval containing zero")
        bits = max(self.bits, o.bits)
        down, up = _ctx_pair(bits)
        pairs = [(self.lo, o.lo), (self.lo, o.hi), (self.hi, o.lo), (self.hi, o.hi)]
        lo = min(down.div(a, b) for a, b in pairs)
        hi = max(up.div(a, b) for a, b in pairs)
        return CertInterval(lo, hi, bits)

    def __rtruediv__(self, other: Scalar) -> "CertInterval":
        o = self._coerce(other)
        return o / self

    def __abs__(self) -> "CertInterval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        _, up = _ctx_pair(self.bits)
        return CertInterval(mpfr(0), max(up.minus(self.lo), self.hi), self.bits)

    def __repr__(self) -> str:
        return f"CertInterval([{self.lo}, {self.hi}], bits={self.bits})"


# -- monotone elementary functions -------------------------------------------


def _monotone_inc(fname: str, x: CertInterval, bits: int) -> CertInterval:
    down, up = _ctx_pair(bits)
    lo = getattr(down, fname)(x.lo)
    hi = getattr(up, fname)(x.hi)
    return CertInterval(lo, hi, bits)


def iexp(x: CertInterval, bits: int | None = None) -> CertInterval:
    return _monotone_inc("exp", x, bits or x.bits)


def ilog(x: CertInterval, bits: int | None = None) -> CertInterval:
    if x.lo <= 0:
        raise DomainError("log requires a strictly positive interval")
    return _monotone_inc("log", x, bits or x.bits)


def isqrt(x: CertInterval, bits: int | None = None) -> CertInterval:
    if x.lo < 0:
        raise DomainError("sqrt requires a nonnegative interval")
    return _monotone_inc("sqrt", x, bits or x.bits)


def isinh(x: CertInterval, bits: int | None = None) -> CertInterval:
    return _monotone_inc("sinh", x, bits or x.bits)


def icosh(x: CertInterval, bits: int | None = None) -> CertInterval:
    bits = bits or x.bits
    down, up = _ctx_pair(bits)
    if x.lo >= 0:
        return CertInterval(down.cosh(x.lo), up.cosh(x.hi), bits)
    if x.hi <= 0:
        return CertInterval(down.cosh(x.hi), up.cosh(x.lo), bits)
    return CertInterval(mpfr(1), max(up.cosh(x.lo), up.cosh(x.hi)), bits)


def ipow(x: CertInterval, y: Union[int, Fraction], bits: int | None = None) -> CertInterval:
    """x**y for integer y (any sign) or rational y (requires lo(x) > 0)."""
    bits = bits or x.bits
    if isinstance(y, int) or (isinstance(y, Fraction) and y.denominator == 1):
        y = int(y)
        if y == 0:
            return CertInterval.from_exact(1, bits)
        if y < 0:
            return 1 / ipow(x, -y, bits)
        # square-and-multiply on intervals; each step outward rounded
        result = CertInterval.from_exact(1, bits)
        base = CertInterval(x.lo, x.hi, bits)
        e = y
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result
    if x.lo <= 0:
        raise DomainError("rational power requires a strictly positive base")
    yq = CertInterval.from_exact(y, bits)
    return iexp(yq * ilog(x, bits), bits)


def pi_interval(bits: int = MIN_BITS) -> CertInterval:
    down, up = _ctx_pair(bits)
    return CertInterval(down.const_pi(), up.const_pi(), bits)


def log2_interval(bits: int = MIN_BITS) -> CertInterval:
    down, up = _ctx_pair(bits)
    return CertInterval(down.const_log2(), up.const_log2(), bits)


# -- trigonometric values at exact rational multiples of pi -------------------


def _reduce_mod2(t: Fraction) -> Fraction:
    t = t % 2
    return t if t >= 0 else t + 2


def cos_pi_rational(t: Fraction, bits: int = MIN_BITS) -> CertInterval:
    """Enclosure of cos(pi*t) for exact rational t.

    t is reduced mod 2 so the argument interval pi*[t] lies inside one
    monotone branch of cos; exact values at t in {0, 1/2, 1, 3/2} short-circuit.
    """
    t = _reduce_mod2(t)
    if t == 0:
        return CertInterval.from_exact(1, bits)
    if t == 1:
        return CertInterval.from_exact(-1, bits)
    if t in (Fraction(1, 2), Fraction(3, 2)):
        return CertInterval.from_exact(0, bits)
    down, up = _ctx_pair(bits)
    tq = mpq(t.numerator, t.denominator)
    arg_lo = down.mul(down.const_pi(), mpfr(tq, context=down))
    arg_hi = up.mul(up.const_pi(), mpfr(tq, context=up))
    if t < 1:
        # cos decreasing on (0, pi); branch containment needs arg_hi < pi
        if not arg_hi < down.const_pi():
            raise PrecisionCapError("cos branch separation failed; raise bits")
        return CertInterval(down.cos(arg_hi), up.cos(arg_lo), bits)
    # 1 < t < 2: cos increasing on (pi, 2*pi)
    if not arg_lo > up.const_pi():
        raise PrecisionCapError("cos branch separation failed; raise bits")
    return CertInterval(down.cos(arg_lo), up.cos(arg_hi), bits)


def sin_pi_rational(t: Fraction, bits: int = MIN_BITS) -> CertInterval:
    return cos_pi_rational(Fraction(1, 2) - t, bits)


# -- exact rational helpers ----------------------------------------------------


def pochhammer(a: Fraction, r: int) -> Fraction:
    """Rising factorial (a)_r = a (a+1) ... (a+r-1); (a)_0 = 1."""
    if r < 0:
        raise DomainError("pochhammer needs r >= 0")
    out = Fraction(1)
    for i in range(r):
        out *= a + i
    return out


# -- generic dispatcher ----------------------------------------------------

_ELEMENTARY: dict[str, Callable] = {
    "exp": lambda x, y, bits: iexp(x, bits),
    "log": lambda x, y, bits: ilog(x, bits),
    "sinh": lambda x, y, bits: isinh(x, bits),
    "cosh": lambda x, y, bits: icosh(x, bits),
    "pow": lambda x, y, bits: ipow(x, y, bits),
}


def eval_elementary(kind: str, x: CertInterval, y: Union[int, Fraction, None] = None,
                    bits: int | None = None) -> CertInterval:
    if kind not in _ELEMENTARY:
        raise DomainError(f"unknown elementary kind {kind!r}")
    if kind == "pow" and y is None:
        raise DomainError("pow needs an exponent")
    return _ELEMENTARY[kind](x, y, bits or x.bits)


def tri_compare(a: CertInterval, b: CertInterval) -> Tri:
    if a.hi < b.lo:
        return Tri.LESS
    if a.lo > b.hi:
        return Tri.GREATER
    return Tri.UNDETERMINED


def with_refinement(check: Callable[[int], Tri], start_bits: int = MIN_BITS,
                    cap: int = MAX_BITS) -> Tri:
    """Run ``check`` at increasing precision until it leaves Undetermined.

    Precision starts at ``start_bits`` and doubles up to ``cap``; past the cap
    the last Undetermined is reported rather than guessed at.
    """
    bits = max(start_bits, MIN_BITS)
    while True:
        verdict = check(bits)
        if verdict is not Tri.UNDETERMINED or bits >= cap:
            return verdict
        bits = min(2 * bits, cap)
