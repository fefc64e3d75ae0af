"""Frozen cutoff constants and the exp-form large-value arithmetic."""

import json
from fractions import Fraction

from opcert.cutoffs import (CutoffValue, constants_json, cutoff_compare,
                            cutoff_max, cutoff_set, n_tilde, turan_cutoff_set)
from opcert.intervals import Tri

A0 = Fraction(0)


def test_cutoff_set_r2_goldens():
    cs = cutoff_set(2, A0, 256)
    assert cs.S_r == 3
    assert cs.N1 == 132
    assert cs.N2 == 15
    assert cs.N3 == 5505
    assert cs.e_Sr_cutoff == 5
    assert cs.N == 5505


def test_cutoff_set_r3_goldens():
    cs = cutoff_set(3, A0, 256)
    assert cs.S_r == 11
    assert cs.N1 == 305
    assert cs.N2 == 70
    assert cs.N == 5505


def test_n_tilde_all_alphas():
    for alpha in (A0, Fraction(1), Fraction(5, 2)):
        assert n_tilde(alpha) == 5505


def test_turan_cutoffs_alpha0():
    cuts = turan_cutoff_set(A0, 256)
    assert cuts.n_u.form == "ExpForm"
    assert cuts.n_u.ln_value.lo <= 1073743872 <= cuts.n_u.ln_value.hi
    assert cuts.n_l.form == "Integer"
    assert len(str(cuts.n_l.integer)) == 98
    assert cuts.literal == 343361460986
    assert cuts.N_T.form == "ExpForm"


def test_cutoff_compare_orders_literal_below_expform():
    cuts = turan_cutoff_set(A0, 256)
    lit = CutoffValue.from_int(343361460986)
    assert cutoff_compare(lit, cuts.n_u) is Tri.LESS
    assert cutoff_compare(cuts.n_u, lit) is Tri.GREATER


def test_cutoff_compare_integers():
    a, b = CutoffValue.from_int(5), CutoffValue.from_int(9)
    assert cutoff_compare(a, b) is Tri.LESS
    assert cutoff_compare(a, a) is Tri.UNDETERMINED
    assert cutoff_max(a, b).integer == 9


def test_constants_json_deterministic_and_parseable():
    one = constants_json(2, A0, 256)
    two = constants_json(2, A0, 256)
    assert one == two
    doc = json.loads(one)
    names = {c["name"] for c in doc["constants"]}
    assert {"S_r", "N1(r)", "N2(r)", "N3(r,alpha)", "N(r,alpha)",
            "N_T(alpha)"} <= names
