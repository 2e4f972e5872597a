from fractions import Fraction

import pytest

import lcgerm


def test_lct_table():
    assert lcgerm.lct([("y^2 - x^3", 1)]) == Fraction(5, 6)
    assert lcgerm.lct([("y^2 - x^4", 1)]) == Fraction(3, 4)
    assert lcgerm.lct([("x^3 - y^3", 1)]) == Fraction(2, 3)
    assert lcgerm.lct([("y^2 - 2*x^4", 1)]) == Fraction(3, 4)
    assert lcgerm.lct([]) is None


def test_lc_and_threshold():
    assert lcgerm.is_log_canonical([("y^2 - x^3", Fraction(5, 6))])
    assert not lcgerm.is_log_canonical([("y^2 - x^3", Fraction(6, 7))])
    half = Fraction(1, 2)
    assert lcgerm.family_threshold([("x", half), ("y", half)], "y - x^4") == Fraction(5, 8)


def test_intersections():
    assert lcgerm.intersection_multiplicity("y^2 - x^3", "y^3 - x^2") == 4
    assert lcgerm.pair_mult([("y - x^4", Fraction(1, 3))], "y") == Fraction(4, 3)


def test_feasibility_evidence():
    feasible, cert = lcgerm.is_feasible(["a", "b"], ["a + b > 1", "a <= 1/2", "b <= 1/2"])
    assert not feasible
    assert cert == [1, 1, 1]
    feasible, witness = lcgerm.is_feasible(["a"], ["a <= 1"])
    assert feasible and witness == [0]


def test_errors():
    with pytest.raises(lcgerm.ParseError):
        lcgerm.lct([("y^^2", 1)])
    with pytest.raises(lcgerm.InvariantError):
        lcgerm.lct([("y^2", 1)])
    with pytest.raises(ValueError):
        lcgerm.intersection_multiplicity("x*y", "x")


def test_reports_verify():
    config = {
        "curves": {"D1": "x", "D2": "y", "C": "y - x^4"},
        "divisor": [{"curve": "C", "coefficient": "3/4"}],
        "deltas": {"delta1": "D1", "delta2": "D2"},
        "a1": "1/2",
        "a2": "1/2",
    }
    ok, report = lcgerm.config_report("theorem", config)
    assert ok
    assert {r["theorem"] for r in report["results"]} >= {"main", "adjunction-delta1"}
    assert lcgerm.verify(report)[0]

    ok, audit = lcgerm.audit()
    assert ok and audit["failures"] == 0
    assert lcgerm.verify(audit)[0]

    audit["entries"][0]["certificate"][0] = "9/1"
    assert not lcgerm.verify(audit)[0]


def test_scenarios_and_fuzz():
    assert "germ-lct-table" in lcgerm.scenario_names()
    ok, rep = lcgerm.scenario("germ-lct-table")
    assert ok and rep["passed"]
    ok, rep = lcgerm.fuzz(seed=42, count=500)
    assert ok
    assert rep["failures"] == []
    assert rep["theorems"]["main"]["asserted"] >= 50
