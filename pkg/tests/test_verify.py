import json
from fractions import Fraction

import pytest

from pgeigen import qcomb
from pgeigen.errors import InvalidParameter
from pgeigen.field import field_for_q
from pgeigen.scalars import PhiPoly
from pgeigen.verify import (SuiteReport, suite_crosscheck, suite_eigen, suite_orthogonality,
                            suite_qpoly, suite_structure)

F2, F3 = field_for_q(2), field_for_q(3)


def test_eigen_examples():
    r = suite_eigen(F2, 3)
    assert r.passed and r.details["multiplicities"] == [1, 7, 7, 1]
    r = suite_eigen(F3, 2)
    assert r.passed and r.details["multiplicities"] == [1, 4, 1]
    r = suite_eigen(F2, 0)
    assert r.passed and r.details["eigenvalues"] == [PhiPoly(2, [-1, 1]).to_json()]


def test_eigen_at_rational_phi():
    r = suite_eigen(F3, 2, phi=Fraction(1, 2))
    assert r.passed and r.phi_mode == "rational"


def test_orthogonality_examples():
    assert suite_orthogonality(F2, 2).details["pairs"] == 10
    r = suite_orthogonality(F2, 4)
    assert r.passed and r.details["pairs"] == 2211
    r = suite_orthogonality(F2, 1)
    assert r.passed and r.details["pairs"] == 1


def test_sampling_is_seeded():
    a = suite_orthogonality(F2, 3, pair_budget=20, seed=4)
    b = suite_orthogonality(F2, 3, pair_budget=20, seed=4)
    assert a.passed and a.details["sampled"] and a.details["pairs"] == 20
    strip = lambda r: {k: v for k, v in r.to_json().items() if k != "seconds"}
    assert strip(a) == strip(b)


def test_qpoly_examples():
    r = suite_qpoly(F2, 2)
    assert r.passed and r.details["far_pairs"] == 1
    # hand computation: <v_(0,1), A* v_(0,0)> = 2phi - 2(phi/2) + phi^2 - phi^2/2
    assert r.details["neighbour_coefficient"] == {
        "alpha": ["0", "0"], "beta": ["0", "1"],
        "value": PhiPoly(2, [0, 1, Fraction(1, 2)]).to_json()}
    row = qcomb.qbinom_row(3, 2)
    far = sum(row[i] * row[j] for i in range(4) for j in range(i + 2, 4))
    r = suite_qpoly(F2, 3)
    assert r.passed and r.details["far_pairs"] == far


def test_structure_examples():
    r = suite_structure(F2, 2)
    assert r.passed
    assert all(part["failures"] == 0 for part in r.details["parts"].values())
    assert suite_structure(F3, 1).passed


def test_crosscheck_examples():
    r = suite_crosscheck(F2, 1, 1)
    assert r.passed
    r = suite_crosscheck(F3, 3, Fraction(1, 2))
    assert r.passed
    with pytest.raises(InvalidParameter):
        suite_crosscheck(F2, 2, 0)
    with pytest.raises(InvalidParameter):
        suite_crosscheck(F2, 2, Fraction(-1, 3))


def test_crosscheck_spectrum_values():
    import numpy as np
    from pgeigen.verify import dense_adjacency
    A = dense_adjacency(F2, 1, Fraction(1))
    assert sorted(np.linalg.eigvals(A).real.round(12)) == [-1.0, 1.0]
    vals = [qcomb.eigenvalue_poly(4, k, 2).evaluate(1).coords[0] for k in range(5)]
    assert vals == [15, 6, 0, -6, -15]
    assert qcomb.qbinom_row(4, 2) == [1, 15, 35, 15, 1]


def test_resource_bound_skips():
    r = suite_eigen(F2, 3, max_subspaces=10)
    assert r.skipped and not r.passed
    assert "exceeds" in r.to_json()["skipped"]


def test_report_records_witnesses():
    r = SuiteReport("demo", 2, 1)
    r.check(True, check="ok")
    r.check(False, check="bad", value=Fraction(1, 3))
    assert not r.passed and r.checks == 2
    assert r.failures == [{"check": "bad", "value": "1/3"}]
    d = r.to_json()
    assert set(d) >= {"suite", "q", "n", "phi_mode", "checks", "failures", "seconds"}
    json.dumps(d)
