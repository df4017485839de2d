"""Smoke tests for the Python bindings."""

import pytest

import coxsolomon as cx


def test_h3_basics():
    sys = cx.System("H3")
    assert sys.order == 120
    assert sys.rank == 3
    assert sys.num_positive_roots == 15
    assert sys.length(sys.longest_element) == 15
    assert sys.conjugacy_class_count() == 10
    assert sys.coxeter_class_count() == 6
    assert sys.dim_ker_phi() == 2


def test_element_arithmetic():
    sys = cx.System("A2")
    s1, s2 = sys.generator(0), sys.generator(1)
    w = sys.multiply(s1, s2)
    assert sys.length(w) == 2
    assert sys.descent_set(w) == [1]
    assert sys.multiply(w, sys.inverse(w)) == sys.identity
    assert sys.from_word(sys.word(w)) == w
    with pytest.raises(IndexError):
        sys.length(999)


def test_h3_d_matrix_paper_order():
    sys = cx.System("H3")
    labels, entries = sys.d_matrix(min_size=2, paper_order=True)
    assert labels == ["12", "123", "13", "23"]
    assert entries == [
        [24, 12, 40, 32],
        [12, 1, 30, 20],
        [40, 30, 52, 46],
        [32, 20, 46, 38],
    ]


def test_check_suites():
    sys = cx.System("B2")
    reports = sys.check("all")
    assert {r["check"] for r in reports} >= {"isometry", "symmetry", "dcc"}
    assert all(r["verdict"] != "fail" for r in reports)
    sym = sys.check("symmetry")
    assert len(sym) == 1 and sym[0]["verdict"] == "pass"


def test_induced_character():
    sys = cx.System("A2")
    values = sys.induced_character([0])
    # Degree at the identity class is |X_I| = 3.
    identity_row = [v for v in values if v["min_length"] == 0]
    assert identity_row[0]["value"] == 3


def test_fixtures():
    assert set(cx.fixture_names()) == {"H3", "H4", "F4", "E6", "E7", "E8"}
    e8 = cx.fixture("E8")
    entries = e8["entries"]
    assert entries[0][0] == 437160960
    assert all(
        entries[i][j] == entries[j][i]
        for i in range(len(entries))
        for j in range(len(entries))
    )
    assert cx.compare_fixture("H3")["verdict"] == "pass"


def test_cap_error():
    with pytest.raises(cx.CoxsolomonError):
        cx.System("E7")
