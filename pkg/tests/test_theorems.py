import json
from fractions import Fraction

import pytest

from descalg import group_algebra as ga
from descalg import theorems as th
from descalg.exact_linalg import evaluate_root_product
from descalg.fields import GF
from descalg.knapsack import WeightVector


def test_report_requires_witness_on_failure():
    with pytest.raises(ValueError):
        th.VerificationReport("x", {}, passed=False)
    r = th.VerificationReport("x", {"n": 3}, passed=False, witness="1*[1,2,3]", millis=1.5)
    assert json.loads(r.to_json()) == {"claim": "x", "params": {"n": 3}, "pass": False,
                                       "witness": "1*[1,2,3]", "millis": 1.5}
    assert "millis" not in r.to_dict(timing=False)


def test_witness_is_first_nonzero_term():
    a = ga.basis_B_comp((1, 1))
    value = evaluate_root_product([2], a)  # a - 2 = -id + (1 2)
    assert th.describe_first_term(value) == "-1*[1,2]"


def test_annihilation_examples():
    r = th.verify_annihilation_Balpha((2, 2))
    assert r.passed and r.details["roots"] == ["0", "2", "6"]
    assert th.verify_annihilation_Balpha((4,)).details["roots"] == ["1"]
    assert th.verify_annihilation_w0Balpha_long((1, 2)).passed
    assert th.verify_annihilation_w0Balpha_long((3,)).passed
    r = th.verify_annihilation_optimal((1, 3))
    assert r.passed and r.details["roots"] == ["-2", "0", "1", "4"]
    r = th.verify_annihilation_optimal((1, 1))
    assert r.passed and "2" in r.details["roots"]


def test_min_poly_examples():
    r = th.verify_min_poly((1, 3))
    assert r.passed and r.details["min_poly"]["factored"] == "(x + 2)*x*(x - 1)*(x - 4)"
    assert r.details["face_algebra_checked"]
    r = th.verify_min_poly((1, 1))
    assert r.details["min_poly"]["factored"] == "x*(x - 2)"


def test_ttr_examples():
    assert th.verify_ttr(5).details["min_poly"]["factored"] == "(x + 3)*(x + 1)*x*(x - 1)*(x - 2)*(x - 5)"
    assert th.verify_ttr(2).details["min_poly"]["factored"] == "x*(x - 2)"
    assert th.verify_ttr(3).details["min_poly"]["factored"] == "(x + 1)*x*(x - 3)"
    with pytest.raises(ValueError):
        th.verify_ttr(1)
    assert th.verify_ttr_baseline(4).details["min_poly"]["factored"] == "x*(x - 1)*(x - 2)*(x - 4)"


def test_ttr_finite_field():
    r = th.verify_ttr_finite_field(4, 3)
    assert r.passed and r.details["asserted"]
    assert r.details["min_poly"]["coefficients"] == ["0", "1", "1", "1"]
    # Over a prime larger than every eigenvalue gap the rational answer survives reduction.
    big = th.verify_ttr_finite_field(4, 1_000_003)
    assert big.passed and big.details["equals_rational_reduction"] and not big.details["asserted"]
    r = th.verify_ttr_finite_field(2, 2)
    assert r.passed and not r.details["asserted"]


def test_face_spectrum_examples():
    r = th.verify_face_spectrum((3,))
    assert r.passed
    # lengths 1, 2, 3 hold 1, 6, 6 faces; the sign is (-1)^(3 - length)
    assert r.details["multiplicities"] == {"-1": 6, "1": 7}
    assert th.verify_face_spectrum((1, 3)).details["multiplicities"]["4"] == 24


def test_weighted_examples():
    gamma = WeightVector(3, {(1, 2): 1, (2, 1): 2, (1, 1, 1): Fraction(1, 3)})
    r = th.verify_weighted(gamma)
    assert r.passed
    zero = th.verify_weighted(WeightVector(3))
    assert zero.passed and zero.details["min_poly"]["coefficients"] == ["0", "1"]
    single = th.verify_weighted(WeightVector.indicator((1, 2)))
    assert single.details["signed_roots"] == th.verify_annihilation_optimal((1, 2)).details["roots"]
    assert single.details["min_poly"] == th.verify_min_poly((1, 2)).details["min_poly"]


def test_altsum_and_descent_combinatorics():
    r = th.verify_altsum(3)
    assert r.passed and r.details == {"faces": 13, "set_partitions": 5}
    for n in range(0, 7):
        assert th.verify_altsum(n).passed
    for n in range(1, 5):
        assert th.verify_descent_combinatorics(n).passed


def test_bounds():
    with pytest.raises(th.BoundExceeded):
        th.verify_face_spectrum((1, 5))
    with pytest.raises(th.BoundExceeded):
        th.verify_ttr(7)
    assert th.verify_ttr(6, th.Bounds.override(6)).passed
    with pytest.raises(th.BoundExceeded):
        th.verify_ttr(9, th.Bounds.override(9))


def test_run_claim_registry():
    reports = th.run_claim("min_poly", 3)
    assert len(reports) == 4 and all(r.passed for r in reports)
    assert len(th.run_claim("ttr", 3)) == 1
    with pytest.raises(ValueError):
        th.run_claim("nope", 3)


def test_failed_claim_produces_witness(monkeypatch):
    # Drop the largest root from the spectrum: the annihilation must now fail with a witness.
    from descalg import knapsack as ks
    real = ks.knapsack_spectrum
    monkeypatch.setattr(ks, "knapsack_spectrum", lambda alpha, method="brute": real(alpha)[:-1])
    r = th.verify_annihilation_Balpha((2, 2))
    assert not r.passed and r.witness.startswith("prod (B_alpha - k): ")


def test_finite_field_minpoly_coefficients_are_residues():
    r = th.verify_ttr_finite_field(5, 7)
    coeffs = [int(c) for c in r.details["min_poly"]["coefficients"]]
    assert all(0 <= c < 7 for c in coeffs) and coeffs[-1] == 1
    assert r.params["field"] == GF(7).name
