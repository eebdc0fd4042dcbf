from __future__ import annotations

import pytest

from hwdesign import cayley, compose, search
from hwdesign.errors import MissingIngredient, NecessaryFail, Rejected
from hwdesign.model import Certificate, HostGraph, res
from hwdesign.verify import check_certificate

from oracle import brute_force_valid


def _empty_pair() -> Certificate:
    vs = [res(i, 2) for i in range(2)]
    return Certificate.build(HostGraph.complete_minus_1f(vs, [tuple(vs)]), [])


def test_filling_groups_adds_profiles():
    outer = compose.resolvable(3, 3, 3)
    inner = compose.resolvable(3, 3)
    cert = compose.c_rgdd(outer, inner, 3, 9)
    assert cert.host.kind == "complete" and cert.host.order() == 9
    assert cert.count("C3") == outer.count("C3") + inner.count("C3")
    assert brute_force_valid(cert)


def test_filling_groups_accepts_a_list_of_inner_designs():
    outer = compose.resolvable(3, 3, 3)
    inner = compose.hamilton(3)
    assert compose.c_rgdd(outer, [inner] * 3, 3, 3).profile == {"C3": 4}


def test_filling_a_single_part_returns_the_inner_design():
    outer = Certificate.build(HostGraph.multipartite([[res(i, 9) for i in range(9)]]), [])
    inner = compose.hamilton(9)
    assert compose.c_rgdd(outer, inner, 9, 9).profile == inner.profile


def test_filling_groups_rejects_wrong_inner_count():
    with pytest.raises(Rejected) as err:
        compose.c_rgdd(compose.resolvable(3, 3, 3), [compose.hamilton(3)] * 2, 3, 3)
    assert err.value.code == "REJECT_PROFILE"


def test_filling_groups_rejects_wrong_inner_order():
    with pytest.raises(Rejected):
        compose.c_rgdd(compose.resolvable(3, 3, 3), compose.hamilton(5), 3, 5)


def test_even_order_takes_the_inner_one_factor():
    cert = compose.c_rgdd(compose.resolvable(4, 4, 2), _empty_pair(), 4, 4)
    assert cert.host.kind == "complete_minus_1f"
    assert len(cert.host.one_factor) == 4
    assert cert.profile == {"C4": 3}
    assert brute_force_valid(cert)


def test_even_order_needs_a_one_factor():
    outer = compose.resolvable(4, 4, 2)
    vs = [res(i, 2) for i in range(2)]
    with pytest.raises(Rejected):
        compose.c_rgdd(outer, Certificate.build(HostGraph.multipartite([[vs[0]], [vs[1]]]), []), 4, 4)


@pytest.mark.parametrize("fill, expected", [
    (lambda: compose.cm_factorization(3, 9), (9, 0)),
    (lambda: cayley.lemma_cmn_two(3, 9), (2, 7)),
])
def test_blow_up_count_identity(fill, expected):
    f = fill()
    cert = compose.l351(compose.hamilton(3), [f], 3, 9)
    assert cert.hw_counts(3, 9) == expected
    assert len(cert.classes) == 9
    assert cert.host.order() == 27


def test_blow_up_needs_one_fill_per_factor():
    with pytest.raises(Rejected):
        compose.l351(compose.hamilton(5), [compose.cm_factorization(5, 3)], 5, 15)


def test_blow_up_fill_must_match_cycle_length():
    with pytest.raises(Rejected):
        compose.l351(compose.hamilton(5), [compose.cm_factorization(3, 3)] * 2, 3, 15)


def test_c3_of_6_has_no_c3_factorization():
    with pytest.raises(NecessaryFail):
        compose.classical("cm", m=3, n=6)


def test_c3_of_4_hamilton_cycles():
    cert = compose.classical("cmn", m=3, n=4)
    assert cert.profile == {"C12": 4}


def test_cycle_fill_parity():
    with pytest.raises(NecessaryFail):
        compose.cycle_fill(4, 3, 3)


def test_unknown_classical_request():
    with pytest.raises(Rejected):
        compose.classical("steiner", v=7)


def test_kirkman_nine_from_blow_up_and_fill():
    cert = compose.resolvable(3, 9)
    assert cert.profile == {"C3": 4} and check_certificate(cert).ok


def test_uniform_two_part_host_view():
    cert = compose.as_hw(compose.resolvable(4, 4, 2))
    assert cert.host.kind == "complete_minus_1f"


@pytest.mark.parametrize("params, profile", [
    ({"u": 5, "beta": 11}, {"C5": 11, "C9": 11}),
    ({"u": 5, "beta": 9}, {"C5": 13, "C9": 9}),
])
def test_nine_u_pipeline(params, profile):
    assert compose.pipeline("Lemma4.8", **params).profile == profile


def test_weighting_pipeline():
    cert = compose.pipeline("Theorem1.4", k=5, t=1, beta=9)
    assert cert.profile == {"C5": 18, "C11": 9}


def test_weighting_plan_avoids_excluded_pieces():
    for beta in sorted(compose.arcs_beta_set(7, 1)):
        plan = compose._weighting_plan(7, 1, beta)
        assert plan is not None, beta
        l, betas = plan
        assert l == 0 or 3 <= l <= 5
        assert not set(betas) & {1, 3, 11, 13}
        assert 14 - 2 * l + sum(betas) == beta


def test_weighting_pipeline_refuses_uncovered_beta():
    with pytest.raises(Rejected):
        compose.pipeline("Theorem1.4", k=5, t=1, beta=17)


def test_thirty_nine_pipeline_reports_missing_ingredient():
    with pytest.raises(MissingIngredient) as err:
        compose.pipeline("Lemma4.9", t=3, budget=search.Budget(2000, 2.0))
    assert err.value.missing == ["HW(39;3,13;19,0)"]


def test_four_k_pipeline_needs_external_base():
    with pytest.raises(MissingIngredient) as err:
        compose.pipeline("Theorem1.5", k=1, t=2, u=2, alpha=3)
    assert err.value.missing[0].startswith("EXTERNAL HW(8;4,8;")


def test_unknown_pipeline():
    with pytest.raises(Rejected):
        compose.pipeline("Lemma9.9")
