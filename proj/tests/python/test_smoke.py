import json
from fractions import Fraction

import pytest

import extatica as ex


def test_parse_and_print():
    p = ex.Polynomial("x*(y/2 + z)", ["x", "y", "z"])
    assert str(p) == "1/2*x*y + x*z"
    assert p.total_degree == 2
    with pytest.raises(ex.ParseError):
        ex.Polynomial("x/(y)", ["x", "y"])


def test_weighted_extactic():
    field = ex.VectorField("x, 2*y", ["x", "y"], mode="affine")
    report = ex.extactic(field, 1)
    assert str(report["extactic"]) == "2*x*y"
    assert report["identically_zero"] is False
    assert report["m"] == 3


def test_slv_invariant_lines():
    field, facts = ex.corpus("slv:1")
    z = ex.Polynomial("z", ["x", "y", "z"])
    assert str(ex.check_invariance(field, z)) == "-3*x + y"
    assert ex.check_invariance(field, ex.Polynomial("x + y", ["x", "y", "z"])) is None
    assert {f["backing"] for f in facts} == {"verified", "cited"}
    assert not ex.extactic(field, 2, system="homogeneous")["identically_zero"]


def test_hamiltonian_first_integral():
    field, _ = ex.corpus("hamiltonian:x^3 - y^2")
    result = ex.first_integral(field, 3)
    assert result["status"] == "found"
    assert str(result["numerator"]) == "x^3 - y^2"
    assert str(result["denominator"]) == "1"


def test_bounds():
    assert ex.bounds.pn_threshold(2, 2, 2, 7) == Fraction(15)
    assert ex.bounds.genus_rhs(2, 2, 1) == 27
    report = ex.bounds.theorem1(100, 3, 5, 2)
    assert report["verdict"] == "forces-first-integral"
    with pytest.raises(ex.HypothesisNotMetError):
        ex.bounds.pn_threshold(2, 2, 2, 6)


def test_cli_entry_point():
    code, out, err = ex.run_cli(["bound", "pn", "--d", "2", "--k", "2", "--n", "2", "--count", "7"])
    assert code == 0 and err == ""
    assert json.loads(out)["threshold"] == "15"
    code, out, err = ex.run_cli(["bound", "pn", "--d", "2", "--k", "2", "--n", "2", "--count", "6"])
    assert code == 3 and out == ""
    assert "error" in json.loads(err)
