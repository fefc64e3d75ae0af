"""Single-source coefficient tables for the ratio bound functions.

Every bound function used by the Turan-side checks is data, not hand-expanded
code: a HalfPowerPoly is a list of terms coeff * log(n)^logpow / n^power with
quarter-integer powers, and the c/d coefficient families are generated by one
pair of functions.  This keeps the tables testable value-by-value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .intervals import CertInterval, ilog, ipow, pi_interval

__all__ = [
    "PolyTerm",
    "HalfPowerPoly",
    "s_plus_poly",
    "s_minus_poly",
    "u_plus_poly",
    "l_plus_poly",
    "ratio_upper_poly",
    "ratio_lower_poly",
    "ratio_upper_shift_poly",
    "ratio_lower_shift_poly",
    "c_coeff",
    "d_coeff",
    "two_power",
    "log8",
    "refinement_pairs",
]

CoeffFn = Callable[[Fraction, int], CertInterval]


@dataclass(frozen=True)
class PolyTerm:
    power: Fraction          # exponent of 1/n (quarter-integer)
    log_power: int           # power of log n
    coeff: CoeffFn           # (alpha, bits) -> CertInterval


@dataclass(frozen=True)
class HalfPowerPoly:
    constant: int
    terms: tuple[PolyTerm, ...]

    def evaluate(self, n: int, alpha: Fraction, bits: int) -> CertInterval:
        n_iv = CertInterval.from_exact(n, bits)
        ln_n = ilog(n_iv)
        total = CertInterval.from_exact(self.constant, bits)
        for t in self.terms:
            val = t.coeff(alpha, bits) / ipow(n_iv, t.power)
            for _ in range(t.log_power):
                val = val * ln_n
            total = total + val
        return total


def _const(fn: Callable[[int], CertInterval]) -> CoeffFn:
    return lambda alpha, bits: fn(bits)


def _exact(q) -> CoeffFn:
    return lambda alpha, bits: CertInterval.from_exact(Fraction(q), bits)


def log8(bits: int) -> CertInterval:
    return ilog(CertInterval.from_exact(8, bits))


def two_power(exponent: Fraction, bits: int) -> CertInterval:
    """2^exponent for rational exponent; exact when the exponent is integral."""
    exponent = Fraction(exponent)
    if exponent.denominator == 1 and exponent >= 0:
        return CertInterval.from_exact(2 ** exponent.numerator, bits)
    return ipow(CertInterval.from_exact(2, bits), exponent)


# -- one-step ratio expansions -------------------------------------------------

def _pi_poly(bits: int, num: dict[int, Fraction], den: Fraction,
             den_pi_pow: int) -> CertInterval:
    """(sum_j num[j] * pi^j) / (den * pi^den_pi_pow)."""
    pi = pi_interval(bits)
    total = CertInterval.from_exact(0, bits)
    for j, q in num.items():
        total = total + CertInterval.from_exact(q, bits) * ipow(pi, j)
    return total / (CertInterval.from_exact(den, bits) * ipow(pi, den_pi_pow))


def _a_coeff(i: int) -> CoeffFn:
    table = {
        3: ({1: Fraction(1)}, Fraction(2), 0),
        5: ({0: Fraction(4), 2: Fraction(-5)}, Fraction(8), 1),
        6: ({0: Fraction(4), 2: Fraction(12), 4: Fraction(1)}, Fraction(8), 2),
        7: ({0: Fraction(8), 2: Fraction(-14), 4: Fraction(3)}, Fraction(16), 3),
        8: ({0: Fraction(24), 2: Fraction(-48), 4: Fraction(-52), 6: Fraction(-15)},
            Fraction(48), 4),
        9: ({0: Fraction(192), 2: Fraction(-432), 4: Fraction(360), 6: Fraction(249),
             8: Fraction(8)}, Fraction(384), 5),
    }
    num, den, piq = table[i]
    return _const(lambda bits: _pi_poly(bits, num, den, piq))


def _b_coeff(i: int) -> CoeffFn:
    table = {
        3: ({1: Fraction(-1)}, Fraction(2), 0),
        5: ({0: Fraction(-4), 2: Fraction(-5)}, Fraction(8), 1),
        # constant and sign corrected: the printed table's entry is a sign-flipped
        # copy of the plus-side value and fails numerically for n >= 10; the
        # series derivation gives (pi^4 + 12 pi^2 - 4) / (8 pi^2)
        6: ({0: Fraction(-4), 2: Fraction(12), 4: Fraction(1)}, Fraction(8), 2),
        7: ({0: Fraction(-8), 2: Fraction(-14), 4: Fraction(-19)}, Fraction(16), 3),
        8: ({0: Fraction(-24), 2: Fraction(-48), 4: Fraction(124), 6: Fraction(15)},
            Fraction(48), 4),
        9: ({0: Fraction(-192), 2: Fraction(-432), 4: Fraction(-552), 6: Fraction(-807),
             8: Fraction(-8)}, Fraction(384), 5),
    }
    num, den, piq = table[i]
    return _const(lambda bits: _pi_poly(bits, num, den, piq))


def s_plus_poly() -> HalfPowerPoly:
    """(n+1)-th root of p(n+1)/p(n) expansion, powers of 1/sqrt(n)."""
    terms = [PolyTerm(Fraction(3, 2), 0, _a_coeff(3)),
             PolyTerm(Fraction(2), 0, _exact(-1))]
    terms += [PolyTerm(Fraction(i, 2), 0, _a_coeff(i)) for i in range(5, 10)]
    return HalfPowerPoly(1, tuple(terms))


def s_minus_poly() -> HalfPowerPoly:
    """(n-1)-th root of p(n-1)/p(n) expansion."""
    terms = [PolyTerm(Fraction(3, 2), 0, _b_coeff(3)),
             PolyTerm(Fraction(2), 0, _exact(1))]
    terms += [PolyTerm(Fraction(i, 2), 0, _b_coeff(i)) for i in range(5, 10)]
    return HalfPowerPoly(1, tuple(terms))


# -- bounds for p(n)^{2/(n(n-1)(n+1))} ------------------------------------------

def _u_plus_core() -> list[PolyTerm]:
    return [
        PolyTerm(Fraction(5, 2), 0, _const(lambda b: 2 * pi_interval(b))),
        PolyTerm(Fraction(3), 0, _const(lambda b: -2 * log8(b))),
        PolyTerm(Fraction(3), 1, _exact(-2)),
        PolyTerm(Fraction(7, 2), 0, _const(lambda b: -2 / pi_interval(b))),
        PolyTerm(Fraction(4), 0, _const(lambda b: -1 / ipow(pi_interval(b), 2))),
        PolyTerm(Fraction(9, 2), 0, _const(
            lambda b: (6 * ipow(pi_interval(b), 4) - 2) / (3 * ipow(pi_interval(b), 3)))),
    ]


def u_plus_poly() -> HalfPowerPoly:
    return HalfPowerPoly(1, tuple(_u_plus_core() + [PolyTerm(Fraction(5), 0, _exact(140))]))


def l_plus_poly() -> HalfPowerPoly:
    return HalfPowerPoly(1, tuple(_u_plus_core() + [PolyTerm(Fraction(5), 1, _exact(-80))]))


# -- coefficient families of the ratio bounds -----------------------------------


def c_coeff(family: int, k: int, alpha: Fraction, ln_n: CertInterval,
            bits: int) -> CertInterval:
    """c_k of family 1 or 2; depends on log n only for (1,k=1), (2,k=1), (2,k=3)."""
    if family not in (1, 2) or not 0 <= k <= 4:
        raise ValueError("family in {1,2}, k in 0..4")
    pi = pi_interval(bits)
    if k == 0:
        return 3 * pi / 4
    if k == 1:
        return (CertInterval.from_exact(3 + 3 * alpha, bits) - 2 * log8(bits)
                - (2 + 2 * alpha) * ln_n)
    if family == 1:
        if k == 2:
            return CertInterval.from_exact(Fraction(-15, 4), bits) / pi
        if k == 3:
            return CertInterval.from_exact(-3, bits) / ipow(pi, 2)
        return _pi_poly(bits, {0: Fraction(-560), 4: Fraction(105)}, Fraction(192), 3)
    if k == 2:
        return _pi_poly(bits, {0: Fraction(-30), 2: Fraction(-15)}, Fraction(8), 1)
    if k == 3:
        pi2 = ipow(pi, 2)
        num = (CertInterval.from_exact(-3, bits) - (11 + 11 * alpha) * pi2
               + 6 * pi2 * log8(bits) + (6 + 6 * alpha) * pi2 * ln_n)
        return num / pi2
    return _pi_poly(bits, {0: Fraction(-560), 2: Fraction(2520), 4: Fraction(735)},
                    Fraction(192), 3)


def d_coeff(k: int, alpha: Fraction, ln_n: CertInterval, bits: int) -> CertInterval:
    """d_k: sum for low k, convolution of the two c-families for 5 <= k <= 9."""
    if 0 <= k <= 4:
        return (c_coeff(1, k, alpha, ln_n, bits) + c_coeff(2, k, alpha, ln_n, bits))
    if 5 <= k <= 9:
        total = CertInterval.from_exact(0, bits)
        for m in range(5, k + 1):
            total = total + (c_coeff(1, m - 5, alpha, ln_n, bits)
                             * c_coeff(2, k - m, alpha, ln_n, bits))
        return total
    raise ValueError("k in 0..9")


# -- the four ratio bound functions ---------------------------------------------


def _common_head(family: int) -> list[PolyTerm]:
    """Terms shared by upper and lower bounds within each family."""
    def c(k):
        # log-free part of c_k folded in; log-bearing parts added separately
        return lambda alpha, bits: c_coeff(
            family, k, alpha, CertInterval.from_exact(0, bits), bits)

    head = [
        PolyTerm(Fraction(5, 2), 0, c(0)),
        PolyTerm(Fraction(3), 0, c(1)),
        PolyTerm(Fraction(3), 1, lambda a, b: CertInterval.from_exact(-(2 + 2 * a), b)),
        PolyTerm(Fraction(7, 2), 0, c(2)),
        PolyTerm(Fraction(4), 0, c(3)),
        PolyTerm(Fraction(9, 2), 0, c(4)),
    ]
    if family == 2:
        head.append(PolyTerm(Fraction(4), 1,
                             lambda a, b: CertInterval.from_exact(6 + 6 * a, b)))
    return head


def refinement_pairs(alpha: Fraction, bits: int) -> dict[str, tuple[CertInterval, CertInterval]]:
    """(a, b) of the n^-5 coefficient a + b log n in each of the four bounds.

    These are exactly the linear-in-log-n quantities whose replacement by
    n^(-19/4) produces the starred refinements, so bound < starred-bound
    reduces to a + b log n < n^(1/4).
    """
    pi2 = ipow(pi_interval(bits), 2)
    pi3 = ipow(pi_interval(bits), 3)
    one = CertInterval.from_exact(1, bits)
    return {
        "upper": (6 * alpha * one + two_power(Fraction(12), bits)
                  + two_power(31 + 18 * alpha, bits),
                  CertInterval.from_exact(2 + 17 * alpha, bits)),
        "lower": (CertInterval.from_exact(258, bits),
                  CertInterval.from_exact(80, bits) + two_power(16 + 7 * alpha, bits)),
        "upper_shift": (12 * one + 4122 * pi2 - 12 * pi2 * log8(bits)
                        + 32 * alpha * pi2 + two_power(31 + 18 * alpha, bits) * pi2,
                        CertInterval.from_exact(2 + 17 * alpha, bits) * pi2),
        "lower_shift": (256 * one + _pi_poly(bits, {2: Fraction(36 * 105),
                                                    4: Fraction(9 * 105),
                                                    0: Fraction(-16 * 105)},
                                             Fraction(128), 3),
                        CertInterval.from_exact(8, bits)
                        * (3 * alpha * one + two_power(13 + 7 * alpha, bits) + 13)),
    }


def _tail_term(name: str, sign: int) -> PolyTerm:
    def coeff(alpha: Fraction, bits: int) -> CertInterval:
        a, _b = refinement_pairs(alpha, bits)[name]
        return sign * a

    def logcoeff(alpha: Fraction, bits: int) -> CertInterval:
        _a, b = refinement_pairs(alpha, bits)[name]
        return sign * b

    return coeff, logcoeff


def _ratio_poly(family: int, name: str, sign: int) -> HalfPowerPoly:
    coeff, logcoeff = _tail_term(name, sign)
    terms = _common_head(family) + [
        PolyTerm(Fraction(5), 0, coeff),
        PolyTerm(Fraction(5), 1, logcoeff),
    ]
    return HalfPowerPoly(1, tuple(terms))


def ratio_upper_poly() -> HalfPowerPoly:
    """Upper bound for r(n-1)r(n+1)/r(n)^2."""
    return _ratio_poly(1, "upper", +1)


def ratio_lower_poly() -> HalfPowerPoly:
    return _ratio_poly(1, "lower", -1)


def ratio_upper_shift_poly() -> HalfPowerPoly:
    """Upper bound for the same quotient at n+1, expressed in n."""
    return _ratio_poly(2, "upper_shift", +1)


def ratio_lower_shift_poly() -> HalfPowerPoly:
    return _ratio_poly(2, "lower_shift", -1)
