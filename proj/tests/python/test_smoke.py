from fractions import Fraction

import pytest

import pfstringy as pf


def test_stringy_display_value():
    usual = pf.stringy(6, 2)
    want = pf.RatFunc("(q^12 - 1)/(q - 1)*(q^3 - 1)*(q^5 - 1)/((q^2 - 1)*(q^4 - 1))")
    assert usual == want
    assert not usual.is_polynomial()
    assert usual(2) == 19747
    assert pf.stringy(6, 2, kind="modified").is_polynomial()
    assert pf.stringy(8, 3, method="strata") == pf.stringy(8, 3)


def test_ratfunc_arithmetic_and_evaluation():
    f = pf.RatFunc("(q^2 - 1)/(q - 1)")
    assert str(f) == "q + 1"
    assert f(Fraction(1, 2)) == Fraction(3, 2)
    assert (f * f - f) == pf.RatFunc("q^2 + q")
    assert pf.gauss_binomial(4, 2)(1) == 6


def test_discrepancies():
    assert pf.discrepancy(2, 2, 6) == 3
    assert pf.discrepancy(2, 2, 6, kind="modified") == 2


def test_cut_sections():
    assert pf.cut_f(6, 1, 1)(2) == 395
    assert pf.cut_f(8, 2, 3, method="recursive") == pf.cut_f(8, 2, 3)
    assert pf.l_iso(1, 2, 4) == pf.RatFunc("1 + q + q^2 + q^3")


def test_k3_and_cubic_fourfold():
    k3 = pf.RatFunc("1 + 22*q + q^2")
    cubic = pf.RatFunc("1 + q + 23*q^2 + q^3 + q^4")
    assert pf.relation_check(k3, cubic, 6, 1, 6)
    assert not pf.relation_check(k3, cubic + pf.RatFunc("1"), 6, 1, 6)
    assert pf.euler_gap(6, 1, 6) == -3
    assert pf.classify(6, 1, 6) == {"X": "CY", "Y": "Fano"}


def test_sod_blocks():
    blocks = pf.sod(7, 1, 5)["blocks"]
    assert [(b["count"], b["size"]) for b in blocks] == [(2, 3)]
    assert pf.sod(6, 2, 12)["blocks"] == []


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        pf.stringy(5, 1, kind="modified")
    with pytest.raises(pf.RangeError):
        pf.relation_rhs(6, 1, 99)


def test_verify_suite():
    report = pf.verify("lemma", {"n": (4, 10)})
    assert report["passed"] is True
    code, out, _ = pf.run_cli(["stringy", "--n", "6", "--k", "2"])
    assert code == 0 and "polynomial: no" in out
