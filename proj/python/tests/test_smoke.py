"""End-to-end smoke tests for the Python bindings."""

import pytest

import caydeg


def test_group_construction():
    G = caydeg.group("Z20")
    assert G.n == 20
    assert G.spec == "Z20"
    assert G.abelian
    assert len(G) == 20
    assert G.parse_element("a^7") == 7
    assert G.mul(3, 5) == 8
    assert G.inv(3) == 17

    H = caydeg.group("GDih(Z5^2)")
    assert H.n == 50
    assert not H.abelian


def test_degree_paper_example():
    G = caydeg.group("Z20")
    S = caydeg.parse_set(G, "1,9,11,19")
    assert S == [1, 9, 11, 19]
    r = caydeg.degree(G, S)
    assert r["degree"] == 2
    assert not r["lower_bound"]
    assert r["path"] == "abelian-formula"
    assert r["field"]["kind"] == "multiquadratic"
    assert r["field"]["discriminants"] == [5]
    assert caydeg.is_two_integral(G, S)
    assert caydeg.set_words(G, S) == "a,a^9,a^11,a^19"


def test_char_poly_pentagon():
    G = caydeg.group("Z5")
    # C5: char poly (x-2)(x^2+x-1)^2 = x^5 - 5x^3 + 5x - 2
    assert caydeg.char_poly(G, [1, 4]) == [-2, 5, 0, -5, 0, 1]


def test_construct_p_integral():
    r = caydeg.construct_p_integral_circulant(27, 3)
    assert r["set"] == [1, 8, 10, 17, 19, 26]
    assert r["degree"]["degree"] == 3


def test_odd_valency_lift():
    G = caydeg.group("Z8")
    r = caydeg.odd_valency_lift(G, [1, 2, 6, 7])
    assert r["added"] == 4
    assert r["set"] == [1, 2, 4, 6, 7]
    assert r["degree"]["degree"] == 2


def test_verify_g2():
    rep = caydeg.verify("G2", 100)
    assert rep["match"]
    assert rep["verdict"] == "match"
    assert rep["counterexample"] is None


def test_verify_bk_counterexample():
    rep = caydeg.verify_Bk(caydeg.group("GDih(Z5^2)"), 3)
    assert not rep["match"]
    ce = rep["counterexample"]
    assert ce is not None
    assert "x^4 - 8*x^2 + 11" in ce["factor_display"]


def test_bounds_are_python_ints():
    assert caydeg.distinct_eigenvalue_bound(1, 2) == 5
    assert caydeg.order_bound(1, 2) == 9
    assert caydeg.distinct_eigenvalue_bound(2, 4) == 570
    assert caydeg.order_bound(2, 4) > 10**200  # exact big int, no overflow


def test_errors_are_typed():
    G = caydeg.group("Z20")
    with pytest.raises(caydeg.CaydegError, match="validation"):
        caydeg.parse_set(G, "0,1")  # identity barred
    with pytest.raises(caydeg.CaydegError, match="cap_exceeded"):
        caydeg.order_bound(6, 6)
    with pytest.raises(caydeg.CaydegError, match="validation"):
        caydeg.group("Znope")
