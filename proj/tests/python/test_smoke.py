import pytest

import wordmaps


def test_commutator_report():
    r = wordmaps.analyze("[x,y]")
    assert r["psl2_verdict"] == "Surjective"
    assert r["minus_id"]["N"] == 2
    assert r["derived_level"] == "InF1NotF2"


def test_power_word():
    r = wordmaps.analyze("x^2 y")
    assert r["sl2_verdict"] == "Surjective"
    assert wordmaps.exponent_sums("x^2 y") == [2, 1]


def test_big_criterion():
    rep = wordmaps.big_slice("[y x y^-1, x^-1]", 1)
    assert rep["verdict"] == "BigAt"
    assert [l["s_exponent"] for l in rep["levels"]] == [4, 2, 0]
    r = wordmaps.analyze("[y x y^-1, x^-1]", big=[1])
    assert r["sl2_verdict"] == "Surjective"


def test_trace_polys():
    p, q = wordmaps.trace_polys("[x,y]")
    assert p == "-s*t*u + s^2 + t^2 + u^2 - 2"
    assert q == "t"


def test_errors():
    with pytest.raises(ValueError):
        wordmaps.analyze("x(y")
    with pytest.raises(wordmaps.InapplicableError):
        wordmaps.big_slice("y", 1)
    with pytest.raises(wordmaps.InapplicableError):
        wordmaps.minus_id("x y")


def test_ff_and_suite():
    assert wordmaps.ff_image("[x,y]", 5, projective=True) == (60, 60, True)
    assert all(ok for _, ok, _ in wordmaps.verify_paper())
    assert wordmaps.derived_level("[[x,[x,y]],[y,[x,y]]]") == "InF2"
