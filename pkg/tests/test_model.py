from __future__ import annotations

import pytest

from hwdesign.errors import Rejected
from hwdesign.model import (
    INF,
    UNIFORM,
    Certificate,
    FactorClass,
    HostGraph,
    canonical_cycle,
    label,
    materialize_edges,
    res,
)


def test_residues_reduce_negative_coordinates():
    assert res((-15,), (35,)) == res((20,), (35,))
    assert res((-1, 7), (5, 3)).coords == (4, 1)


def test_vertex_order_puts_inf_then_labels_then_residues():
    vs = sorted([res(0, 3), label("a"), INF])
    assert vs == [INF, label("a"), res(0, 3)]


def test_shift_leaves_inf_and_labels_alone():
    assert INF.shift((1, 1)) is INF
    assert res((2, 1), (3, 2)).shift((1, 1)) == res((0, 0), (3, 2))


def test_canonical_cycle_ignores_rotation_and_direction():
    a, b, c, d = (res(i, 7) for i in range(4))
    assert canonical_cycle((c, d, a, b)) == canonical_cycle((a, d, c, b)) == (a, b, c, d)


@pytest.mark.parametrize("host, count", [
    (HostGraph.complete([res(i, 7) for i in range(7)]), 21),
    (HostGraph.multipartite([[res((p, y), (3, 2)) for y in range(2)] for p in range(3)]), 12),
    (HostGraph.lex_cycle(5, 3), 45),
    (HostGraph.lex_cycle(3, 4), 48),
    (HostGraph.cayley((9, 19), [(0, d) for d in range(1, 19)] + [(1, 0), (-1, 0)]), 1710),
])
def test_edge_counts(host, count):
    assert len(materialize_edges(host)) == count


def test_complete_minus_one_factor():
    vs = [res(i, 4) for i in range(4)]
    host = HostGraph.complete_minus_1f(vs, [(vs[0], vs[1]), (vs[2], vs[3])])
    assert len(materialize_edges(host)) == 4


def test_cayley_connection_must_be_symmetric():
    with pytest.raises(Rejected):
        HostGraph.cayley((5,), [(1,)])


def test_multipartite_parts_must_be_disjoint():
    with pytest.raises(Rejected):
        HostGraph.multipartite([[res(0, 4), res(1, 4)], [res(1, 4), res(2, 4)]])


def test_certificate_profile_and_counts():
    vs = [res(i, 5) for i in range(5)]
    cls = [FactorClass.of(UNIFORM, [[vs[0], vs[1], vs[2], vs[3], vs[4]]], 5),
           FactorClass.of(UNIFORM, [[vs[0], vs[2], vs[4], vs[1], vs[3]]], 5)]
    cert = Certificate.build(HostGraph.complete(vs), cls, {"note": (1, 2)})
    assert cert.profile == {"C5": 2}
    assert cert.hw_counts(3, 5) == (0, 2)
    assert cert.provenance == {"note": [1, 2]}
    assert cert.with_provenance(x=1).provenance == {"note": [1, 2], "x": 1}


def test_translate_moves_missing_vertex():
    v = res((0, 1), (3, 2))
    cls = FactorClass.of("almost_parallel", [[res((1, 0), (3, 2)), res((2, 0), (3, 2)), res((1, 1), (3, 2))]], 3, v)
    assert cls.translate((1, 0)).missing == res((1, 1), (3, 2))
