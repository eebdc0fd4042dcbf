from __future__ import annotations

import pytest

from hwdesign import arcs
from hwdesign.errors import MissingIngredient, Nonexistent, OpenCase, Rejected
from hwdesign.verify import check_alignment, check_certificate


@pytest.mark.parametrize("k", [9, 11, 13, 21, 49])
def test_single_group_template(k):
    cert = arcs.build_arcs(k, 1)
    assert cert.profile == {f"AP{k}": k, f"half{k}": 1}
    assert check_certificate(cert).ok
    assert check_alignment(cert)


@pytest.mark.parametrize("k", [9, 13, 15, 21, 23, 27])
def test_three_group_template(k):
    cert = arcs.build_arcs(k, 3)
    assert cert.profile == {f"AP{k}": 3 * k, f"half{k}": 1}
    half = [c for c in cert.classes if c.kind == "half_parallel"][0]
    assert len(half.cycles) == 3


def test_template_branches_by_residue():
    tags = {k: arcs.base_cycles_6k1(k).subcase for k in range(9, 32, 2)}
    assert tags[9].startswith("special") and tags[19].startswith("special")
    assert "9 mod 12" in tags[21] and "1 mod 12" in tags[25]
    assert "7 mod 8" in tags[23] and "3 mod 8" in tags[27]


@pytest.mark.parametrize("k, t", [(3, 1), (3, 2), (4, 1)])
def test_nonexistent_orders(k, t):
    with pytest.raises(Nonexistent) as err:
        arcs.build_arcs(k, t)
    assert "exception" in err.value.citation


@pytest.mark.parametrize("k, t", [(8, 2), (14, 2), (11, 2)])
def test_open_orders(k, t):
    with pytest.raises(OpenCase):
        arcs.build_arcs(k, t)


def test_small_searched_bases():
    for k in (5, 7):
        cert = arcs.build_arcs(k, 1)
        assert cert.profile == {f"AP{k}": k, f"half{k}": 1}


def test_frame_fill_gives_aligned_design():
    cert = arcs.build_arcs(5, 4)
    assert cert.profile == {"AP5": 20, "half5": 1}
    assert check_alignment(cert)


def test_unimplemented_existing_order():
    with pytest.raises(MissingIngredient):
        arcs.build_arcs(3, 3)


def test_bad_parameters():
    with pytest.raises(Rejected):
        arcs.build_arcs(2, 1)
