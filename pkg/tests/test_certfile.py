from __future__ import annotations

import pytest

from corpus import corpus
from hwdesign import certfile
from hwdesign.errors import ParseError
from hwdesign.fixtures import fixture
from hwdesign.verify import check_certificate


@pytest.mark.parametrize("name", [n for n, _ in corpus()])
def test_round_trip(name):
    cert = dict(corpus())[name]
    back = certfile.parse(certfile.serialize(cert))
    assert back.host == cert.host
    assert back.classes == cert.classes
    assert back.profile == cert.profile
    assert check_certificate(back).ok


def test_serialization_is_stable():
    cert = fixture("L4.6")
    text = certfile.serialize(cert)
    assert certfile.serialize(certfile.parse(text)) == text


def test_printed_rows_survive():
    cert = fixture("L4.3")
    back = certfile.parse(certfile.serialize(cert))
    assert back.provenance["printed"] == cert.provenance["printed"]


def test_truncated_file_reports_position():
    text = certfile.serialize(fixture("L4.1"))
    with pytest.raises(ParseError) as err:
        certfile.parse(text[: len(text) // 2])
    assert err.value.line >= 1


@pytest.mark.parametrize("text, where", [
    ("moduli 3\n", 1),
    ("version 9\n", 1),
    ("version 1\nmoduli 3\nhost complete\nbogus 1\nend\n", 4),
    ("version 1\nmoduli 3\nhost complete\nvertices (0) (1) (2\nend\n", 4),
])
def test_parse_errors(text, where):
    with pytest.raises(ParseError) as err:
        certfile.parse(text)
    assert err.value.line == where


def test_unknown_fields_are_rejected():
    text = certfile.serialize(fixture("L4.1")).replace("version 1\n", "version 1\ncolour blue\n")
    with pytest.raises(ParseError):
        certfile.parse(text)
