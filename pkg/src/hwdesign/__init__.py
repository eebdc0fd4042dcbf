"""Hamilton-Waterloo designs: certificates, verification, constructions and search."""

from .arcs import build_arcs
from .certfile import parse, read, serialize, write
from .compose import c_rgdd, classical, l351, pipeline
from .errors import (
    DesignError,
    MissingIngredient,
    NecessaryFail,
    Nonexistent,
    NotFound,
    OpenCase,
    ParseError,
    Rejected,
)
from .fixtures import fixture
from .model import Certificate, FactorClass, HostGraph, Vertex
from .status import HwpStatus, arcs_status, hwp_status
from .verify import check_certificate, require_valid

__all__ = [
    "Certificate", "DesignError", "FactorClass", "HostGraph", "HwpStatus", "MissingIngredient",
    "NecessaryFail", "Nonexistent", "NotFound", "OpenCase", "ParseError", "Rejected", "Vertex",
    "arcs_status", "build_arcs", "c_rgdd", "check_certificate", "classical", "fixture",
    "hwp_status", "l351", "parse", "pipeline", "read", "require_valid", "serialize", "write",
]
