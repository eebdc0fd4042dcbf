from __future__ import annotations

import pytest

from hwdesign import arcs, cayley, search
from hwdesign.errors import NecessaryFail, Rejected
from hwdesign.model import Certificate, materialize_edges
from hwdesign.verify import check_certificate


def test_rows_develop_into_cm_factors():
    table = cayley.BaseRowTable.from_increments(3, 5, [(1, 1, -2), (2, 2, -4), (0, 0, 0)])
    classes = cayley.develop_rows(table)
    assert [c.k for c in classes] == [3, 3, 3]
    assert sorted(table.consumed().elements()) == sorted([1, 1, 3, 2, 2, 1, 0, 0, 0] * 5)


def test_row_of_wrong_length_is_rejected():
    with pytest.raises(Rejected):
        cayley.BaseRowTable.from_increments(5, 7, [(1, 2)])
    with pytest.raises(Rejected):
        cayley.develop_rows(cayley.BaseRowTable(5, 7, ((1, 2),)))


def test_difference_budget_refuses_reuse():
    bud = cayley.DifferenceBudget.for_classes(5, 9, range(9))
    bud.consume("a", [1, 8])
    with pytest.raises(Rejected) as err:
        bud.consume("b", [1, 8])
    assert err.value.code == "REJECT_BUDGET"


@pytest.mark.parametrize("d", [1, 2, 4, 13])
def test_two_cn_blocks(d):
    classes = cayley.difference_factorization(17, 35, cayley.two_Cn(d))
    assert [c.k for c in classes] == [35, 35]
    cert = Certificate.build(cayley.forward_host(17, 35, [d, -d]), classes)
    assert check_certificate(cert).ok


def test_four_cn_block_on_coprime_pair():
    classes = cayley.difference_factorization(17, 35, cayley.four_Cn(4, 8))
    assert len(classes) == 4 and {c.k for c in classes} == {35}


def test_five_cm_block():
    classes = cayley.difference_factorization(9, 5, cayley.five_Cm(1, 1))
    assert len(classes) == 5 and {c.k for c in classes} == {9}


def test_construction_00_from_9_arcs():
    cert = cayley.construction_00(arcs.build_arcs(9, 1))
    assert cert.profile == {"C9": 10}
    assert len(materialize_edges(cert.host)) == 1710


def test_construction_00_needs_aligned_arcs():
    good = arcs.build_arcs(5, 1)
    half = [c for c in good.classes if c.kind == "half_parallel"]
    broken = Certificate(good.host, tuple(c for c in good.classes if c.kind != "half_parallel")[:-1] + tuple(half),
                         good.profile)
    with pytest.raises(Rejected):
        cayley.construction_00(broken)


def test_construction_2ku_from_small_frame():
    cert = cayley.construction_2ku(search.search_frame(3, 2, 4), 3)
    assert cert.profile == {"1F": 1, "C3": 4}


@pytest.mark.parametrize("k, t, l, profile", [
    (5, 1, 0, {"C11": 10}),
    (5, 1, 3, {"C5": 6, "C11": 4}),
    (17, 1, 14, {"C17": 28, "C35": 6}),
])
def test_construction_2l(k, t, l, profile):
    assert cayley.construction_2l(k, t, l).profile == profile


@pytest.mark.parametrize("l", [1, 2, 4, 5])
def test_construction_2l_excluded_l(l):
    with pytest.raises(Rejected):
        cayley.construction_2l(5, 1, l)


def test_stored_array_rows_close_up():
    rows = cayley.l311_increments()
    assert len(rows) == 28 and all(len(r) == 17 and sum(r) % 35 == 0 for r in rows)


@pytest.mark.parametrize("m, n", [(3, 9), (5, 9), (3, 15), (7, 9)])
def test_two_cm_factors(m, n):
    cert = cayley.lemma_cmn_two(m, n)
    assert cert.hw_counts(m, n) == (2, n - 2)
    assert cert.host.kind == "lex_cycle"


def test_two_cm_factors_parameter_range():
    with pytest.raises(Rejected):
        cayley.lemma_cmn_two(3, 11)


@pytest.mark.parametrize("m", [5, 7])
def test_four_cm_factors_on_nine(m):
    assert cayley.lemma_cm9(m).hw_counts(m, 9) == (4, 5)


def test_four_cm_factors_impossible_beyond_nine():
    with pytest.raises(NecessaryFail):
        cayley.lemma_cm9(11)


def test_stored_nine_column_rows_extend_periodically():
    short, long = cayley.cm9_table(5), cayley.cm9_table(7)
    assert len(long.rows) == 4 and all(len(r) == 6 for r in long.rows)
    for a, b in zip(short.rows, long.rows):
        assert b[:4] == a and b[4:] == b[2:4]
