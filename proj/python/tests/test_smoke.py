from fractions import Fraction

import pytest

import eiscong


def test_character_basics():
    chi = eiscong.DirichletCharacter("157.28")
    assert chi.order == 4
    assert chi.is_odd()
    assert chi.conductor == 157
    assert (chi * chi.inverse()).order == 1
    assert eiscong.kronecker_character(-47).label == "47.46"


def test_bernoulli_and_lvalue():
    assert eiscong.bernoulli(12) == Fraction(-691, 2730)
    lv = eiscong.l_value("47.46")
    assert eiscong.rational_coeffs(lv["value"]) == [Fraction(5)]
    lv = eiscong.l_value(eiscong.teichmuller_character(37).pow(31), p=37)
    assert lv["valuations"][0]["val"] == 1


def test_classgroup_and_forms():
    G = eiscong.classgroup(-47)
    assert G["h"] == 5 and G["structure"] == [5]
    forms = eiscong.cm_forms(-23, 3, 30)
    assert len(forms) == 1
    assert forms[0]["level"] == 23


def test_congruence_pipeline():
    r = eiscong.congruence_depth(-47, 5)
    assert [f["m_lambda"] for f in r["forms"]] == [1, 1]
    assert r["e"] == 2 and r["lhs"] == "2/1"
    assert r["bound"]["pass"]
    with pytest.raises(ValueError):
        eiscong.congruence_depth(-23, 3)


def test_hypotheses_and_specialization():
    h = eiscong.check_hypotheses("37.15", 37, [37])
    assert h["verdict"] == "PASS"
    assert h["primes"][0]["A1"]["cyclicity"] == "Certified"
    assert eiscong.check_cm(-47, 5)["verdict"] == "PASS"
    s = eiscong.lambda_specialize("47.46", 5, 3, 7)
    assert s["holds"]
    hits = [h["label"] for h in eiscong.search(4, 5, 150, 160)["hits"]]
    assert "157.28" in hits
