from __future__ import annotations

import pytest

from hwdesign import certfile
from hwdesign.errors import Rejected
from hwdesign.fixtures import FIXTURES, fixture, format_cycle, parse_cycle

from oracle import brute_force_valid

PROFILES = {
    "L3.11": {"C17": 28, "C35": 6},
    "L4.1": {"C3": 6, "C11": 5},
    "L4.2": {"C3": 8, "C13": 5},
    "L4.3": {"C3": 8, "C15": 7},
    "L4.5": {"C3": 6, "C11": 10},
    "L4.6": {"C5": 9, "C7": 8},
    "L4.7": {"C3": 8, "C13": 11},
}


@pytest.mark.parametrize("name", sorted(PROFILES))
def test_fixture_profile(name):
    assert fixture(name).profile == PROFILES[name]


def test_every_fixture_listed():
    assert set(FIXTURES) == set(PROFILES)


@pytest.mark.parametrize("name", ["L4.1", "L4.5", "L4.6"])
def test_fixture_agrees_with_brute_force(name):
    assert brute_force_valid(fixture(name))


@pytest.mark.parametrize("name, group, first", [
    ("L4.1", "P", "a, 0_0, 4_4"),
    ("L4.5", "Q", "a, 2_3, 1_3, 0_3, 5_1, 4_3, 3_1, 2_0, 3_4, 3_0, 3_2"),
    ("L4.6", "extra", "0_0, 4_2, 2_2, 1_4, 3_4"),
    ("L4.7", "F", "0_0, 4_1, 7_2"),
])
def test_printed_rows_kept(name, group, first):
    assert fixture(name).provenance["printed"][group][0] == first


@pytest.mark.parametrize("name", ["L4.1", "L4.6"])
def test_printed_rows_survive_serialization(name):
    cert = fixture(name)
    back = certfile.parse(certfile.serialize(cert))
    assert back.provenance["printed"] == cert.provenance["printed"]


@pytest.mark.parametrize("text, moduli", [("a, 0_0, 4_4", (6, 5)), ("0, 10, 17", (45,))])
def test_cycle_notation_round_trip(text, moduli):
    assert format_cycle(parse_cycle(text, moduli)) == text


def test_unknown_fixture():
    with pytest.raises(Rejected) as err:
        fixture("L9.9")
    assert err.value.code == "UNKNOWN_FIXTURE"
