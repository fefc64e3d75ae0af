"""Named constants and hypothesis cutoffs, with exp-form for giant thresholds.

Every cutoff is either an exact integer or, when its logarithm exceeds
EXPFORM_LN_LIMIT, an ExpForm carrying a certified interval for its natural
log.  Ceilings are certified: precision is raised until the enclosing
interval no longer straddles an integer.

Where the source text gives two variants of the same constant, both are
computed and the larger enters every cutoff (cutoffs only need to be large
enough, so the maximum preserves every guarantee).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .intervals import (
    MAX_BITS,
    MIN_BITS,
    CertInterval,
    PrecisionCapError,
    Tri,
    iexp,
    ilog,
    ipow,
    pi_interval,
    pochhammer,
    tri_compare,
)
from .differences import C_r, C_r_alpha, S_seq, lemma24_min_n

__all__ = [
    "CutoffValue",
    "CutoffSet",
    "TuranCutoffSet",
    "EXPFORM_LN_LIMIT",
    "cutoff_set",
    "turan_cutoff_set",
    "cutoff_compare",
    "cutoff_max",
    "n_tilde",
    "constants_json",
    "N0",
    "N1_r",
    "C2_variants",
]

EXPFORM_LN_LIMIT = 10 ** 6


@dataclass(frozen=True)
class CutoffValue:
    """Exact integer, or exp-form when only the logarithm is representable."""
    form: str  # "Integer" | "ExpForm"
    integer: int | None = None
    ln_value: CertInterval | None = None

    @classmethod
    def from_int(cls, n: int) -> "CutoffValue":
        return cls(form="Integer", integer=n)

    @classmethod
    def from_ln(cls, ln_value: CertInterval) -> "CutoffValue":
        return cls(form="ExpForm", ln_value=ln_value)

    def ln(self, bits: int = MIN_BITS) -> CertInterval:
        if self.form == "Integer":
            if self.integer < 1:
                raise ValueError("log of a non-positive cutoff")
            return ilog(CertInterval.from_exact(self.integer, bits))
        return self.ln_value

    def to_json_dict(self, name: str, provenance: str) -> dict:
        if self.form == "Integer":
            return {"name": name, "form": "Integer",
                    "integer_or_ln": str(self.integer), "provenance": provenance}
        return {"name": name, "form": "ExpForm",
                "integer_or_ln": {"lo": str(self.ln_value.lo),
                                  "hi": str(self.ln_value.hi),
                                  "bits": self.ln_value.bits},
                "provenance": provenance}


def cutoff_compare(a: CutoffValue, b: CutoffValue) -> Tri:
    """Total order up to Undetermined; mixed forms compared in log-domain."""
    if a.form == "Integer" and b.form == "Integer":
        if a.integer < b.integer:
            return Tri.LESS
        if a.integer > b.integer:
            return Tri.GREATER
        return Tri.UNDETERMINED  # equal: no strict order
    bits = max(x.ln_value.bits for x in (a, b) if x.form == "ExpForm")
    return tri_compare(a.ln(bits), b.ln(bits))


def cutoff_max(*values: CutoffValue) -> CutoffValue:
    best = values[0]
    for v in values[1:]:
        c = cutoff_compare(best, v)
        if c is Tri.LESS:
            best = v
        elif c is Tri.UNDETERMINED and v.form == "Integer" and best.form == "Integer":
            # equal integers: keep either
            continue
        elif c is Tri.UNDETERMINED:
            raise PrecisionCapError("max of cutoffs undecidable")
    return best


def certified_ceil(fn: Callable[[int], CertInterval], bits: int = MIN_BITS) -> int:
    """ceil of a real given by interval evaluations, raising precision as needed."""
    while bits <= MAX_BITS:
        iv = fn(bits)
        lo, hi = iv.to_fractions()
        if math.ceil(lo) == math.ceil(hi):
            return int(math.ceil(lo))
        bits *= 2
    raise PrecisionCapError("ceiling straddles an integer at precision cap")


def _ceil_cutoff(ln_fn: Callable[[int], CertInterval],
                 fn: Callable[[int], CertInterval],
                 bits: int = MIN_BITS) -> CutoffValue:
    """Ceiling cutoff that falls back to exp form when the value is giant."""
    ln_iv = ln_fn(bits)
    if ln_iv.lo > EXPFORM_LN_LIMIT:
        return CutoffValue.from_ln(ln_iv)
    return CutoffValue.from_int(certified_ceil(fn, bits))


def _exp_ceil(exponent_fn: Callable[[int], CertInterval],
              bits: int = MIN_BITS) -> CutoffValue:
    """ceil(e^x) with x given by interval evaluations."""
    return _ceil_cutoff(exponent_fn, lambda b: iexp(exponent_fn(b)), bits)


# -- difference-side constants ----------------------------------------------------


def N0(m: int, bits: int = MIN_BITS) -> CertInterval:
    """1 at m=1, else 2m log m - m log log m (real-valued, not a ceiling)."""
    if m == 1:
        return CertInterval.from_exact(1, bits)
    ln_m = ilog(CertInterval.from_exact(m, bits))
    return 2 * m * ln_m - m * ilog(ln_m)


def N1_r(r: int, bits: int = MIN_BITS) -> int:
    """max(85, ceil(4/pi^2 * N0(2r+2)^2))."""
    val = certified_ceil(
        lambda b: 4 * ipow(N0(2 * r + 2, b), 2) / ipow(pi_interval(b), 2), bits)
    return max(85, val)


def C2_variants(r: int, bits: int = MIN_BITS) -> tuple[CertInterval, CertInterval]:
    """Truncated series constant, in both textual variants (factor 1 and 2)."""
    def series(factor: int, b: int) -> CertInterval:
        pi = pi_interval(b)
        total = CertInterval.from_exact(Fraction(2 * r, 10 ** r), b)
        for k in range(0, 2 * r - 1):
            coeff = Fraction(factor, (k + 1) ** 2) * pochhammer(Fraction(k + 1, 2), r)
            coeff = coeff / Fraction(r ** k)
            total = total + CertInterval.from_exact(coeff, b) / ipow(pi, k + 1)
        return total
    return series(1, bits), series(2, bits)


def N2_r(r: int, bits: int = MIN_BITS) -> int:
    """Conservative max over the four textual variants of the same cutoff."""
    candidates = [
        certified_ceil(lambda b: 2 * ipow(C_r(r, b), 2), bits),
        certified_ceil(lambda b: 2 * ipow(C_r(r, b), Fraction(2, r)), bits),
    ]
    for fact in (math.factorial(r - 1), math.factorial(r)):
        candidates.append(certified_ceil(
            lambda b, f=fact: ipow(
                CertInterval.from_exact(2 ** (r + 1), b)
                / (f * ilog(CertInterval.from_exact(8, b))), 2), bits))
    return max(candidates)


def N3_r_alpha(r: int, alpha: Fraction, bits: int = MIN_BITS) -> int:
    c2 = lambda b: C2_variants(r, b)[1]  # larger variant into the cutoff
    cand1 = certified_ceil(
        lambda b: ipow(4 * r * r * C_r(r, b) + c2(b), Fraction(4, 3)), bits)
    cand2 = certified_ceil(
        lambda b: ipow(C_r_alpha(r, alpha, b) / C_r(r, b), 4), bits)
    return max(5505, 4 * r * r, cand1, cand2)


@dataclass(frozen=True)
class CutoffSet:
    r: int
    alpha: Fraction
    S_r: int
    N1: int
    N2: int
    N3: int
    e_Sr_cutoff: int
    N: int


def cutoff_set(r: int, alpha: Fraction, bits: int = MIN_BITS) -> CutoffSet:
    if r < 2:
        raise ValueError("cutoff set defined for r >= 2")
    n1 = N1_r(r, bits)
    n2 = N2_r(r, bits)
    n3 = N3_r_alpha(r, alpha, bits)
    e_cut = lemma24_min_n(r)
    return CutoffSet(r=r, alpha=Fraction(alpha), S_r=S_seq(r), N1=n1, N2=n2,
                     N3=n3, e_Sr_cutoff=e_cut, N=max(n1, n2, n3, e_cut))


# -- scaled-root cutoffs -----------------------------------------------------------


def _frac_root_ceil(x: Fraction, k: int) -> int:
    """ceil(x^(1/k)) for nonnegative rational x, exact."""
    if x <= 0:
        return 0
    return certified_ceil(
        lambda b: ipow(CertInterval.from_exact(x, b), Fraction(1, k)))


def n_tilde(alpha: Fraction) -> int:
    """Hypothesis cutoff for the power-quotient and ratio sandwich bounds."""
    alpha = Fraction(alpha)
    common = [_frac_root_ceil(2 * alpha, 2), _frac_root_ceil(3 * alpha, 3),
              _frac_root_ceil(Fraction(11, 3) * alpha, 4)]
    nt1 = max(common + [_frac_root_ceil(10 * alpha, 5)])
    nt2 = max([2] + common + [_frac_root_ceil(12 * alpha, 5)])
    nt3 = max(5505,
              certified_ceil(lambda b: ipow(CertInterval.from_exact(
                  (4 * alpha) / (alpha * alpha + 1), b), Fraction(4, 3)))
              if alpha > 0 else 0,
              certified_ceil(lambda b: ipow(
                  CertInterval.from_exact(4 * alpha, b), Fraction(4, 11)))
              if alpha > 0 else 0)
    return max(nt1, nt2, nt3)


def _power19(base_fn: Callable[[int], CertInterval], bits: int) -> CutoffValue:
    return _ceil_cutoff(lambda b: 19 * ilog(base_fn(b)),
                        lambda b: ipow(base_fn(b), 19), bits)


@dataclass(frozen=True)
class TuranCutoffSet:
    alpha: Fraction
    n_u: CutoffValue
    n_l: CutoffValue
    n_u1: CutoffValue
    n_l1: CutoffValue
    N1: CutoffValue
    N2_1: CutoffValue
    N2_2: CutoffValue
    N2: CutoffValue
    literal: int
    N_T: CutoffValue


def turan_cutoff_set(alpha: Fraction, bits: int = MIN_BITS) -> TuranCutoffSet:
    from .coefficients import log8, two_power, refinement_pairs

    alpha = Fraction(alpha)

    def exp_arg(name: str) -> Callable[[int], CertInterval]:
        def fn(b: int) -> CertInterval:
            a, bb = refinement_pairs(alpha, b)[name]
            return a / bb
        return fn

    n_u = cutoff_max(
        _exp_ceil(exp_arg("upper"), bits),
        _power19(lambda b: CertInterval.from_exact(4 + 34 * alpha, b), bits))
    n_l = cutoff_max(
        _exp_ceil(exp_arg("lower"), bits),
        _power19(lambda b: CertInterval.from_exact(160, b)
                 + two_power(17 + 7 * alpha, b), bits))
    n_u1 = cutoff_max(
        _exp_ceil(exp_arg("upper_shift"), bits),
        _ceil_cutoff(
            lambda b: 38 * ilog(pi_interval(b))
            + 19 * ilog(CertInterval.from_exact(4 + 34 * alpha, b)),
            lambda b: ipow(pi_interval(b), 38)
            * ipow(CertInterval.from_exact(4 + 34 * alpha, b), 19), bits))
    n_l1 = cutoff_max(
        _exp_ceil(exp_arg("lower_shift"), bits),
        _power19(lambda b: 16 * (CertInterval.from_exact(3 * alpha + 13, b)
                                 + two_power(13 + 7 * alpha, b)), bits))
    N1 = cutoff_max(n_u, n_l, n_u1, n_l1)

    def e_cut(num_fn: Callable[[int], CertInterval], den: Fraction) -> CutoffValue:
        return _exp_ceil(lambda b: num_fn(b) / CertInterval.from_exact(den, b), bits)

    e1 = e_cut(lambda b: CertInterval.from_exact(3 + 3 * alpha, b) - 2 * log8(b),
               2 + 2 * alpha)
    e2 = e_cut(lambda b: 2 * log8(b) - (3 + 3 * alpha), 2 + 2 * alpha)
    p227_1 = _ceil_cutoff(
        lambda b: 227 * ilog(CertInterval.from_exact(4 + 4 * alpha, b)),
        lambda b: ipow(CertInterval.from_exact(4 + 4 * alpha, b), 227), bits)
    N2_1 = cutoff_max(e1, e2, p227_1)

    e3 = e_cut(lambda b: 3 / ipow(pi_interval(b), 2)
               + (11 + 11 * alpha) - 6 * log8(b), 6 + 6 * alpha)
    e4 = e_cut(lambda b: 6 * log8(b) - (11 + 11 * alpha)
               - 3 / ipow(pi_interval(b), 2), 6 + 6 * alpha)
    p227_2 = _ceil_cutoff(
        lambda b: 227 * ilog(CertInterval.from_exact(12 + 12 * alpha, b)),
        lambda b: ipow(CertInterval.from_exact(12 + 12 * alpha, b), 227), bits)
    N2_2 = cutoff_max(e1, e2, e3, e4, p227_2)
    N2 = cutoff_max(N2_1, N2_2)

    literal = 343361460986
    N_T = cutoff_max(CutoffValue.from_int(n_tilde(alpha)), N1, N2,
                     CutoffValue.from_int(literal))
    return TuranCutoffSet(alpha=alpha, n_u=n_u, n_l=n_l, n_u1=n_u1, n_l1=n_l1,
                          N1=N1, N2_1=N2_1, N2_2=N2_2, N2=N2,
                          literal=literal, N_T=N_T)


# -- JSON dump ---------------------------------------------------------------------


def constants_json(r: int, alpha: Fraction, bits: int = MIN_BITS) -> str:
    cs = cutoff_set(r, alpha, bits)
    ts = turan_cutoff_set(alpha, bits)
    c_r = C_r(r, bits)
    c_ra = C_r_alpha(r, alpha, bits)
    c2lo, c2hi = C2_variants(r, bits)
    entries = [
        {"name": "S_r", "form": "Integer", "integer_or_ln": str(cs.S_r),
         "provenance": "recurrence S_n = n*S_(n-1) + (n-1)!"},
        {"name": "N1(r)", "form": "Integer", "integer_or_ln": str(cs.N1),
         "provenance": "max(85, ceil(4/pi^2 * N0(2r+2)^2))"},
        {"name": "N2(r)", "form": "Integer", "integer_or_ln": str(cs.N2),
         "provenance": "max over textual variants of the two ceilings"},
        {"name": "N3(r,alpha)", "form": "Integer", "integer_or_ln": str(cs.N3),
         "provenance": "max(5505, 4r^2, ceil((4r^2 C+C2)^(4/3)), ceil((C(r,a)/C(r))^4))"},
        {"name": "ceil(e^(S_r/r!))", "form": "Integer",
         "integer_or_ln": str(cs.e_Sr_cutoff), "provenance": "sandwich hypothesis"},
        {"name": "N(r,alpha)", "form": "Integer", "integer_or_ln": str(cs.N),
         "provenance": "max of the four components"},
        {"name": "C(r)", "form": "Interval",
         "integer_or_ln": {"lo": str(c_r.lo), "hi": str(c_r.hi), "bits": c_r.bits},
         "provenance": "pi * rising(1/2, r)"},
        {"name": "C(r,alpha)", "form": "Interval",
         "integer_or_ln": {"lo": str(c_ra.lo), "hi": str(c_ra.hi), "bits": c_ra.bits},
         "provenance": "(alpha+1) r! + (r-1)! log 8 + 1"},
        {"name": "C2(r) variant low", "form": "Interval",
         "integer_or_ln": {"lo": str(c2lo.lo), "hi": str(c2lo.hi), "bits": c2lo.bits},
         "provenance": "series constant, factor 1"},
        {"name": "C2(r) variant high", "form": "Interval",
         "integer_or_ln": {"lo": str(c2hi.lo), "hi": str(c2hi.hi), "bits": c2hi.bits},
         "provenance": "series constant, factor 2"},
        {"name": "Ntilde(alpha)", "form": "Integer",
         "integer_or_ln": str(n_tilde(alpha)), "provenance": "ratio-bound hypothesis"},
        ts.n_u.to_json_dict("n_u(alpha)", "upper-bound refinement threshold"),
        ts.n_l.to_json_dict("n_l(alpha)", "lower-bound refinement threshold"),
        ts.n_u1.to_json_dict("n_u1(alpha)", "shifted upper refinement threshold"),
        ts.n_l1.to_json_dict("n_l1(alpha)", "shifted lower refinement threshold"),
        ts.N1.to_json_dict("N1(alpha)", "max of the four refinement thresholds"),
        ts.N2.to_json_dict("N2(alpha)", "coefficient-cap threshold"),
        {"name": "N_T literal", "form": "Integer", "integer_or_ln": str(ts.literal),
         "provenance": "explicit numeric component of the final cutoff"},
        ts.N_T.to_json_dict("N_T(alpha)", "max of all components"),
    ]
    return json.dumps({"r": r, "alpha": str(alpha), "constants": entries}, indent=2)
