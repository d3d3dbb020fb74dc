from fractions import Fraction
from pathlib import Path

import pytest

import aware

DATA = Path(__file__).resolve().parents[2] / "data"


def test_parse_round_trip():
    assert aware.parse("K_1 p & (q)") == "K_1 p & q"
    with pytest.raises(aware.ParseError):
        aware.parse("p & & q")


def test_dlr3():
    m = aware.Model.load("m_dlr3")
    assert m.states == ["alpha", "w1", "w2"]
    assert m.distinguished == "alpha"
    assert aware.evaluate(m, "A_1 p", m.valuation("e")) == ["w2"]
    assert aware.schema_check(m, "KU-Introspection", "alpha")
    assert not aware.schema_check(m, "KU-Introspection")
    report = aware.dlr_report(m, max_n=5)
    assert report["all_hold"]
    assert len(report["verdicts"]) == 8


def test_ring4():
    m = aware.Model.load("m_ring4")
    assert aware.valid(m, "K_1 exists p. U_1 p & ~exists p. K_1 U_1 p", "1")
    assert len(aware.automorphisms(m)) == 6
    assert all(aware.coherent(m, s) for s in m.states)
    assert aware.witness(m, "1", "1") == ["2"]
    r = aware.refute(m, "A_1 p & A_1 q -> A_1 (p & q)")
    assert r is None or r["state"] in m.states


def test_model_text_round_trip():
    text = (DATA / "models" / "m_ring4.model").read_text()
    assert aware.Model.from_text(text).to_text() == text


def test_extension_and_search():
    m = aware.Model.load("m_dlr3")
    text = aware.extend_dlr(m, event=["alpha", "w1"])
    ext = aware.Model.from_text(text)
    for s in ("Plausibility", "KU-Introspection", "AU-Introspection"):
        assert aware.schema_check(ext, s, "alpha")
    found = aware.search("A_1 p -> K_1 p", max_states=4)
    assert found is not None
    cm = aware.Model.from_text(found["model"])
    assert found["state"] not in aware.evaluate(cm, "A_1 p -> K_1 p", cm.valuation("refuting"))
    assert aware.search("K_1 p -> p", max_states=2) is None


def test_proof():
    accepted, bad_line, _ = aware.check_proof((DATA / "proofs" / "not_k_u.proof").read_text())
    assert accepted and bad_line == 0
    accepted, bad_line, reason = aware.check_proof("calculus: base\n1. K_1 p -> p ; pl\n")
    assert not accepted and bad_line == 1 and reason


def test_trade():
    rows = aware.trade("trade5")
    assert [r["trade_possible"] for r in rows] == [True] * 5
    assert aware.eu("trade5", "A", "1", "f") == Fraction(13, 3)
    assert aware.eu(str(DATA / "scenarios" / "trade5.scenario"), "B", "3", "f") == Fraction(19, 5)


def test_verify_paper():
    results = aware.verify_paper()
    assert results and all(r["holds"] for r in results)


def test_errors():
    with pytest.raises(aware.AwareError):
        aware.Model.load("/nonexistent.model")
    with pytest.raises(aware.AwareError):
        aware.automorphisms(aware.Model.load("m_dlr3"))
