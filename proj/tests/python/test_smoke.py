import math

import pytest

import curvlab


def clifford_spec():
    return curvlab.catalog_build("clifford", [2, 4, 1, math.pi / 3])


def test_check_passes_on_catalog_point():
    rep = curvlab.check(clifford_spec())
    assert rep["all_passed"]
    ids = {r["id"]: r for r in rep["identities"]}
    assert ids["eq_2_14_crrc"]["applicable"]
    assert ids["eq_2_14_crrc"]["residual"] < 1e-10
    assert rep["memberships"]["in_U_S"]


def test_classify_flags():
    cls = curvlab.classify(clifford_spec())
    assert cls["flags"]["roter"]["value"]
    assert not cls["flags"]["quasi_einstein"]["value"]
    phi, mu, eta = cls["roter_coeffs"]
    assert abs(phi - 0.75) < 1e-9
    assert abs(mu - (-1.5)) < 1e-9
    assert abs(eta - 4.0) < 1e-9


def test_scalars():
    spec = curvlab.catalog_build("two_quasi_umbilical", [5, 1])
    rep = curvlab.check(spec)
    assert abs(rep["scalars"]["tau"] - (-6.0)) < 1e-9
    cls = curvlab.classify(spec)
    assert cls["flags"]["generalized_roter"]["value"]
    assert cls["flags"]["two_quasi_umbilical"]["value"]


def test_identity_ids_stable():
    ids = curvlab.identity_ids()
    assert len(ids) == 36
    assert ids[0] == "eq_3_1_S"
    assert "eq_4_17_RS" in ids


def test_catalog_roundtrip():
    assert "type_two" in curvlab.catalog_names()
    assert len(curvlab.standard_catalog()) >= 16
    ev = curvlab.evaluate_catalog("type_two", [5, 1, 2, 1])
    assert ev["all_ok"]
    assert ev["expected"]
    assert all(c["provenance"].startswith(("[PAPER]", "[DERIVED]")) for c in ev["expected"])


def test_validation_raises():
    spec = clifford_spec()
    spec["dimension"] = 7
    with pytest.raises(ValueError):
        curvlab.check(spec)
    with pytest.raises(ValueError):
        curvlab.classify({"dimension": 4, "curvatures": []})
