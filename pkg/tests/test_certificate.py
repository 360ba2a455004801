# tests/test_certificate.py

import copy

import pytest

from certificate import build_certificate, validate_certificate
from config import CERT_SCHEMA, CertifyConfig, HostLimits, SearchConfig
from constructions import verify_good
from errors import BoundRefutedError, DomainError, HostCapExceeded
from host_model import Coloring, PartiteShape, encode_graph6

TINY_BUDGET = CertifyConfig(search=SearchConfig(node_budget=10))


@pytest.fixture(scope="module")
def trusted_certificate():
    certificate, upper = build_certificate(5, 20)
    assert upper.status == "unverified"
    return certificate


def test_large_cell_is_formula_trusted(trusted_certificate):
    certificate = trusted_certificate
    assert certificate["schema"] == CERT_SCHEMA
    assert certificate["claimed_value"] == 9
    assert certificate["regime"] == "general-formula"
    assert certificate["upper_bound"]["method"] == "formula_trusted"
    assert certificate["upper_bound"]["citation"]
    assert certificate["lower_bound"]["shape"] == {"parts": [8] * 5}
    assert certificate["lower_bound"]["report"]["is_good"] is True
    assert not certificate["paper_ambiguous"]
    assert validate_certificate(certificate) == []


def test_budget_run_falls_back_to_trusted_upper_bound():
    certificate, upper = build_certificate(5, 4, TINY_BUDGET)
    assert upper.status == "unverified"
    assert certificate["upper_bound"]["method"] == "formula_trusted"
    assert "budget" in certificate["upper_bound"]["reason"]
    assert certificate["options"]["node_budget"] == 10
    assert validate_certificate(certificate) == []


def test_host_limits_reach_both_bounds(trusted_certificate):
    certificate, upper = build_certificate(5, 4, limits=HostLimits(max_vertices=14))
    assert certificate["lower_bound"]["shape"] == {"parts": [2] * 5}
    assert upper.status == "unverified"
    assert "cap is 14" in certificate["upper_bound"]["reason"]
    with pytest.raises(HostCapExceeded):
        build_certificate(5, 20, limits=HostLimits(max_vertices=39))
    problems = validate_certificate(trusted_certificate, HostLimits(max_vertices=39))
    assert any("cap is 39" in p for p in problems), problems


def test_value_one_cell_has_no_lower_bound():
    certificate, _ = build_certificate(8, 2, TINY_BUDGET)
    assert certificate["claimed_value"] == 1
    assert certificate["lower_bound"] is None
    assert validate_certificate(certificate) == []


@pytest.mark.parametrize("field, value, fragment", [
    ("claimed_value", 10, "differs from formula value"),
    ("regime", "value-1", "regime"),
    ("schema", "ramsey-cert/0", "schema"),
    ("lower_bound", None, "needs a lower-bound coloring"),
    ("upper_bound", {"method": "guessed"}, "unknown upper-bound method"),
    ("upper_bound", {"method": "formula_trusted"}, "needs a citation"),
])
def test_tampered_fields_are_reported(trusted_certificate, field, value, fragment):
    tampered = copy.deepcopy(trusted_certificate)
    tampered[field] = value
    problems = validate_certificate(tampered)
    assert any(fragment in p for p in problems), problems


def test_bad_embedded_coloring(trusted_certificate):
    tampered = copy.deepcopy(trusted_certificate)
    shape = PartiteShape.uniform(5, 8)
    tampered["lower_bound"]["graph6"] = encode_graph6(Coloring.all_red(shape).red)
    problems = validate_certificate(tampered)
    assert any("not good" in p for p in problems)
    assert any("nu(red)" in p for p in problems)


def test_wrong_lower_bound_host(trusted_certificate):
    tampered = copy.deepcopy(trusted_certificate)
    shape = PartiteShape.uniform(5, 7)
    tampered["lower_bound"]["shape"] = shape.to_json()
    tampered["lower_bound"]["graph6"] = encode_graph6(Coloring.all_blue(shape).red)
    assert any("is not K_" in p for p in validate_certificate(tampered))


def test_malformed_input():
    assert validate_certificate([1, 2]) == ["certificate must be a JSON object"]
    problems = validate_certificate({"schema": CERT_SCHEMA})
    assert problems and problems[-1].startswith("malformed certificate")


def test_infinite_row_has_no_certificate():
    with pytest.raises(DomainError):
        build_certificate(2, 6)


def test_refuted_cell():
    with pytest.raises(BoundRefutedError) as info:
        build_certificate(3, 2)
    assert info.value.exit_code == 1
    counterexample = info.value.counterexample
    assert counterexample.shape == PartiteShape.uniform(3, 2)
    assert verify_good(counterexample, 2).is_good


@pytest.mark.slow
def test_exhausted_certificate_round_trip():
    certificate, upper = build_certificate(8, 2)
    assert upper.verified
    assert certificate["upper_bound"]["method"] == "exhausted"
    assert validate_certificate(certificate) == []
    tampered = copy.deepcopy(certificate)
    tampered["upper_bound"]["exhaustion"]["n"] = 3
    assert any("different (n, L)" in p for p in validate_certificate(tampered))
