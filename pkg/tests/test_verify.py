from __future__ import annotations

import random

import pytest

from corpus import class_duplication, cycle_deletion, small_corpus, vertex_swap
from hwdesign import arcs, search
from hwdesign.errors import Rejected
from hwdesign.fixtures import fixture
from hwdesign.model import UNIFORM, Certificate, FactorClass, HostGraph, res
from hwdesign.verify import (
    check_alignment,
    check_certificate,
    check_frame,
    check_lemma_conditions,
    difference_list,
    require_valid,
)
from oracle import brute_force_valid


def _k5() -> Certificate:
    vs = [res(i, 5) for i in range(5)]
    return Certificate.build(HostGraph.complete(vs), [
        FactorClass.of(UNIFORM, [[vs[0], vs[1], vs[2], vs[3], vs[4]]], 5),
        FactorClass.of(UNIFORM, [[vs[0], vs[2], vs[4], vs[1], vs[3]]], 5),
    ])


def test_two_pentagons_factor_k5():
    rep = check_certificate(_k5())
    assert rep.ok and rep.verdict == "VALID"
    assert rep.profile == {"C5": 2}


def test_duplicated_class_is_double_covered():
    cert = _k5()
    bad = Certificate(cert.host, cert.classes + cert.classes[:1], cert.profile)
    rep = check_certificate(bad)
    assert not rep.ok
    assert "DOUBLE_COVERED_EDGE" in rep.codes()


def test_missing_class_leaves_edges_uncovered():
    cert = _k5()
    bad = Certificate(cert.host, cert.classes[:1], cert.profile)
    assert {"UNCOVERED_EDGE", "PROFILE_MISMATCH"} <= check_certificate(bad).codes()


def test_foreign_edge_and_short_cycle():
    vs = [res(i, 4) for i in range(4)]
    host = HostGraph.complete_minus_1f(vs, [(vs[0], vs[1]), (vs[2], vs[3])])
    cert = Certificate(host, (FactorClass.of(UNIFORM, [[vs[0], vs[1], vs[2], vs[3]]], 4),), {"C4": 1})
    assert "FOREIGN_EDGE" in check_certificate(cert).codes()


def test_mutated_fixture_reports_witness():
    cert = fixture("L4.6")
    rep = check_certificate(class_duplication(cert, random.Random(1)))
    assert rep.violations and rep.violations[0][1] is not None
    assert "DOUBLE_COVERED_EDGE" in rep.summary()


def test_require_valid_raises():
    cert = _k5()
    with pytest.raises(Rejected):
        require_valid(Certificate(cert.host, cert.classes[:1], cert.profile))


def test_frame_checker_accepts_search_output():
    frame = search.search_frame(3, 2, 4)
    assert check_frame(frame, frame.host.parts, 3).ok


def test_frame_checker_counts_holes():
    frame = search.search_frame(3, 2, 4)
    bad = Certificate(frame.host, frame.classes[:-1], frame.profile)
    assert "HOLE_COUNT" in check_frame(bad, frame.host.parts, 3).codes()


def test_template_conditions_and_differences():
    t = arcs.base_cycles_2k1(9)
    base = t.base_class()
    assert check_lemma_conditions(base, "A", 9, t.d).ok
    mixed = difference_list(base, (0, 1), 9)
    assert sorted(mixed.diffs) == list(range(9))


def test_template_conditions_catch_a_broken_cycle():
    t = arcs.base_cycles_2k1(11)
    base = t.base_class()
    c0 = list(base.cycles[0])
    c0[1], c0[2] = c0[2], c0[1]
    broken = FactorClass(base.kind, (tuple(c0),) + base.cycles[1:], base.k, base.missing)
    assert not check_lemma_conditions(broken, "A", 11, t.d).ok


def test_alignment_of_arcs():
    assert check_alignment(arcs.build_arcs(9, 1))
    assert check_alignment(arcs.build_arcs(9, 3))


@pytest.mark.parametrize("mutate", [vertex_swap, cycle_deletion, class_duplication])
def test_mutations_agree_with_brute_force(mutate):
    rng = random.Random(7)
    for name, cert in small_corpus()[:8]:
        bad = mutate(cert, rng)
        assert not check_certificate(bad).ok, name
        assert not brute_force_valid(bad), name
