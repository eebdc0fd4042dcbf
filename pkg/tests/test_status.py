from __future__ import annotations

import pytest

from hwdesign.status import arcs_status, hwp_status, necessary_failure

from status_table import ARCS_TABLE, HWP_TABLE


@pytest.mark.parametrize("tup", sorted(HWP_TABLE))
def test_hwp_classification(tup):
    cls, fragment = HWP_TABLE[tup]
    st = hwp_status(*tup)
    assert st.classification == cls
    assert fragment in st.detail


@pytest.mark.parametrize("k, t", sorted(ARCS_TABLE))
def test_arcs_classification(k, t):
    assert arcs_status(k, t).classification == ARCS_TABLE[(k, t)]


def test_swapping_lengths_is_symmetric():
    for (v, m, n, a, b) in HWP_TABLE:
        assert hwp_status(v, m, n, a, b) == hwp_status(v, n, m, b, a)


def test_union_of_open_tags():
    st = hwp_status(55, 5, 11, 26, 1)
    assert "Theorem 1.3 exception" in st.detail and "Problem 5.1 (k=5, t=1)" in st.detail
    assert st.line().startswith("OPEN(")


def test_status_line_format():
    assert hwp_status(33, 3, 11, 6, 10).line() == "SOLVABLE(fixture L4.5) [Lemma 4.5]"


def test_necessary_conditions():
    assert necessary_failure(15, 3, 5, 4, 3) is None
    assert "at least 3" in necessary_failure(8, 2, 4, 1, 2)
    assert necessary_failure(15, 3, 5, -1, 8) is not None


def test_arcs_exception_citation():
    assert arcs_status(3, 2).line() == "NONEXISTENT (Theorem 1.2 exception)"
    assert arcs_status(2, 5).classification == "NONEXISTENT"
