"""Small explicit designs, stored as their printed base cycles plus development rules."""

from __future__ import annotations

from typing import Callable, Sequence

from .errors import Rejected
from .model import (
    UNIFORM,
    Certificate,
    FactorClass,
    HostGraph,
    Vertex,
    label,
    res,
)
from .verify import require_valid

# base cycles exactly as printed, one string per cycle
P_C3_11 = (
    "a, 0_0, 4_4", "b, 2_3, 1_0", "c, 2_4, 3_1", "1_1, 3_3, 5_0", "2_2, 4_0, 0_2", "0_1, 5_2, 1_4",
    "1_2, 2_1, 3_2", "3_4, 2_0, 4_2", "5_1, 0_3, 4_3", "1_3, 0_4, 5_4", "3_0, 4_1, 5_3",
)
Q_C3_11 = (
    "a, 1_1, 5_1, 3_0, 1_4, 0_4, 4_1, 2_2, 3_2, 1_3, 3_1",
    "b, 5_0, 0_1, 1_2, 2_3, 4_3, 0_2, 2_4, 0_3, 2_1, 4_2",
    "c, 0_0, 5_2, 1_0, 2_0, 3_3, 4_0, 5_4, 4_4, 3_4, 5_3",
)
Q_C3_13 = (
    "0_0, 5_2, 10_1, 2_2, 7_1, 12_0, 4_1, 9_0, 1_1, 6_0, 11_2, 3_0, 8_2",
    "0_0, 7_1, 1_2, 4_1, 11_2, 3_1, 6_0, 10_2, 2_1, 8_0, 12_2, 9_0, 5_1",
    "0_0, 10_1, 3_0, 7_2, 12_0, 2_2, 9_0, 1_2, 6_0, 11_1, 5_2, 8_1, 4_2",
    "0_0, 9_1, 3_2, 8_0, 11_2, 1_1, 10_2, 4_0, 7_2, 2_1, 5_0, 12_1, 6_2",
    "0_0, 3_2, 12_0, 4_2, 9_0, 6_1, 2_2, 11_0, 7_1, 10_0, 5_2, 1_0, 8_1",
)
P_C3_15 = ("0, 1, 2", "0, 4, 8", "0, 5, 7", "0, 10, 17", "0, 11, 16", "0, 13, 23", "0, 14, 22", "0, 19, 32")
Q_C3_15 = (
    "0, 34, 6, 41, 3, 43, 9, 44, 10, 27, 2, 16, 5, 22, 38",
    "0, 20, 1, 3, 2, 19, 21, 14, 43, 26, 40, 9, 38, 42, 37",
    "0, 28, 2, 12, 1, 18, 7, 21, 5, 9, 8, 19, 44, 25, 41",
    "0, 29, 1, 17, 28, 3, 23, 4, 20, 39, 22, 42, 26, 6, 40",
    "0, 31, 6, 32, 3, 29, 9, 34, 11, 37, 23, 42, 40, 20, 43",
    "0, 25, 2, 9, 1, 6, 5, 19, 33, 23, 43, 12, 11, 22, 44",
    "0, 26, 1, 23, 40, 3, 44, 13, 21, 17, 37, 39, 34, 42, 35",
)
P_K33 = (
    "a, 1_1, 4_1", "b, 2_2, 5_2", "c, 0_0, 3_0", "3_3, 5_0, 1_4", "4_4, 0_3, 2_0", "0_1, 2_4, 3_2",
    "1_2, 2_3, 2_1", "3_4, 4_0, 4_3", "5_1, 4_2, 5_3", "0_2, 3_1, 5_4", "1_3, 0_4, 1_0",
)
Q_K33 = (
    "a, 2_3, 1_3, 0_3, 5_1, 4_3, 3_1, 2_0, 3_4, 3_0, 3_2",
    "b, 0_2, 2_1, 5_4, 0_4, 4_1, 4_2, 1_0, 5_2, 5_3, 1_4",
    "c, 1_1, 4_0, 0_0, 3_3, 1_2, 5_0, 2_4, 4_4, 0_1, 2_2",
)
P_K35 = (
    "0_0, 1_1, 2_2, 3_3, 4_4", "0_5, 2_0, 4_2, 1_6, 3_1", "0_3, 1_2, 2_5, 0_1, 2_1",
    "1_4, 2_3, 3_6, 4_5, 0_6", "4_0, 3_4, 0_4, 3_5, 2_6", "1_0, 4_1, 2_4, 3_2, 4_6",
    "4_3, 1_5, 0_2, 3_0, 1_3",
)
EXTRA_K35 = ("0_0, 4_2, 2_2, 1_4, 3_4", "0_0, 1_4, 3_3, 2_3, 4_1")
Q_K35 = (
    "0_0, 0_3, 2_2, 2_5, 1_1, 1_4, 3_2", "3_3, 3_6, 1_5, 0_5, 2_1, 4_4, 1_0",
    "1_6, 2_6, 2_0, 0_6, 4_6, 4_5, 4_1", "3_1, 4_3, 2_4, 1_2, 1_3, 0_1, 0_2",
    "4_2, 3_4, 3_5, 2_3, 3_0, 4_0, 0_4",
)
Q_K39 = (
    "0_0, 4_2, 2_2, 6_1, 1_1, 3_1, 11_0, 7_1, 5_1, 8_0, 12_2, 9_0, 10_0",
    "0_0, 5_0, 3_0, 7_2, 2_2, 10_2, 4_0, 1_1, 6_2, 11_0, 12_0, 9_0, 8_0",
    "0_0, 9_1, 2_1, 5_0, 4_0, 8_0, 6_0, 10_0, 1_2, 11_2, 7_2, 12_2, 3_2",
    "0_0, 3_0, 6_0, 1_1, 4_1, 9_2, 5_2, 10_2, 12_2, 7_1, 8_1, 2_2, 11_0",
    "0_0, 5_2, 10_1, 1_1, 9_1, 3_1, 6_0, 11_2, 8_0, 2_0, 7_1, 12_0, 4_0",
    "0_0, 7_1, 10_1, 8_1, 11_1, 3_0, 4_0, 9_0, 1_1, 2_1, 5_1, 12_1, 6_2",
    "0_0, 10_1, 2_0, 3_0, 11_0, 5_1, 8_1, 4_2, 12_1, 6_1, 9_1, 1_0, 7_0",
    "0_0, 12_0, 2_0, 9_1, 4_2, 11_0, 10_0, 6_1, 7_1, 3_1, 8_2, 1_1, 5_1",
    "0_0, 2_0, 6_0, 5_0, 10_1, 7_2, 4_0, 12_1, 8_1, 3_2, 9_1, 11_1, 1_0",
    "0_0, 8_2, 1_2, 12_2, 3_1, 10_1, 2_2, 7_1, 4_1, 6_1, 11_1, 5_1, 9_0",
    "0_0, 6_0, 9_2, 7_2, 1_0, 5_2, 12_0, 2_2, 11_2, 4_2, 10_2, 3_1, 8_1",
)
TRIANGLE_13x3 = "0_0, 4_1, 7_2"


def parse_cycle(text: str, moduli: Sequence[int]) -> tuple[Vertex, ...]:
    """'a, 0_0, 4_4' -> vertices; 'x_i' is (x, i), bare integers are residues, letters are labels."""
    out = []
    for tok in (t.strip() for t in text.split(",")):
        if "_" in tok:
            x, i = tok.split("_")
            out.append(res((int(x), int(i)), moduli))
        elif tok.lstrip("-").isdigit():
            out.append(res(int(tok), moduli))
        else:
            out.append(label(tok))
    return tuple(out)


def format_cycle(cyc: Sequence[Vertex]) -> str:
    """Inverse of parse_cycle, in the printed notation."""
    parts = []
    for v in cyc:
        if v.is_residue:
            parts.append("_".join(map(str, v.coords)))
        else:
            parts.append(v.name)
    return ", ".join(parts)


def _orbit(base: Sequence[Vertex], step: Sequence[int], count: int) -> list[tuple[Vertex, ...]]:
    out, cur = [], tuple(base)
    for _ in range(count):
        out.append(cur)
        cur = tuple(v.shift(step) for v in cur)
    return out


def _developed_class(cycles: Sequence[Sequence[Vertex]], k: int, step, count: int) -> list[FactorClass]:
    """One factor from ``cycles``, and its ``count`` translates by ``step``."""
    base = FactorClass.of(UNIFORM, cycles, k)
    out, cur = [], base
    for _ in range(count):
        out.append(cur)
        cur = cur.translate(step)
    return out


def _single_orbit_factor(cycle: Sequence[Vertex], step, count: int, k: int) -> FactorClass:
    return FactorClass.of(UNIFORM, _orbit(cycle, step, count), k)


def _printed(groups: dict[str, Sequence[str]]) -> dict:
    return {name: list(rows) for name, rows in groups.items()}


def _c3_11() -> Certificate:
    mod = (6, 5)
    parts = [
        [label("a")] + [res((x, i), mod) for x in (2, 5) for i in range(5)],
        [label("b")] + [res((x, i), mod) for x in (0, 3) for i in range(5)],
        [label("c")] + [res((x, i), mod) for x in (1, 4) for i in range(5)],
    ]
    P = [parse_cycle(c, mod) for c in P_C3_11]
    Q = [parse_cycle(c, mod) for c in Q_C3_11]
    last = [(label("a"), label("b"), label("c"))]
    for i in range(5):
        last.append((res((0, i), mod), res((1, 2 + i), mod), res((2, 4 + i), mod)))
        last.append((res((3, 3 + i), mod), res((4, 2 + i), mod), res((5, 3 + i), mod)))
    classes = _developed_class(P, 3, (0, 1), 5) + [FactorClass.of(UNIFORM, last, 3)]
    classes += _developed_class(Q, 11, (0, 1), 5)
    return Certificate.build(HostGraph.multipartite(parts), classes,
                             {"fixture": "L4.1", "printed": _printed({"P": P_C3_11, "Q": Q_C3_11})})


def _zero_block_13x3() -> list[FactorClass]:
    """Five C_3-factors on +-{0,1,2} x {+-1} over Z_13 x Z_3 (rows searched on Z_3 x Z_13, then swapped)."""
    from .cayley import difference_factorization, five_Cm

    swapped = difference_factorization(3, 13, five_Cm(1, 1))
    mapping = {res((x, y), (3, 13)): res((y, x), (13, 3)) for x in range(3) for y in range(13)}
    return [c.relabel(mapping) for c in swapped]


def _triangle_family_13x3() -> list[FactorClass]:
    tri = parse_cycle(TRIANGLE_13x3, (13, 3))
    F = _single_orbit_factor(tri, (1, 0), 13, 3)
    return [F, F.translate((0, 1)), F.translate((0, 2))]


def _c3_13() -> Certificate:
    mod = (13, 3)
    parts = [[res((x, i), mod) for x in range(13)] for i in range(3)]
    classes = _zero_block_13x3() + _triangle_family_13x3()
    classes += [_single_orbit_factor(parse_cycle(c, mod), (0, 1), 3, 13) for c in Q_C3_13]
    return Certificate.build(HostGraph.multipartite(parts), classes,
                             {"fixture": "L4.2", "printed": _printed({"F": [TRIANGLE_13x3], "Q": Q_C3_13})})


def _c3_15() -> Certificate:
    parts = [[res(3 * i + j, 45) for i in range(15)] for j in range(3)]
    classes = [_single_orbit_factor(parse_cycle(c, 45), (3,), 15, 3) for c in P_C3_15]
    classes += [_single_orbit_factor(parse_cycle(c, 45), (15,), 3, 15) for c in Q_C3_15]
    return Certificate.build(HostGraph.multipartite(parts), classes,
                             {"fixture": "L4.3", "printed": _printed({"P": P_C3_15, "Q": Q_C3_15})})


def _k33() -> Certificate:
    mod = (6, 5)
    verts = [label(s) for s in "abc"] + [res((x, i), mod) for x in range(6) for i in range(5)]
    P = [parse_cycle(c, mod) for c in P_K33]
    Q = [parse_cycle(c, mod) for c in Q_K33]
    last = [(label("a"), label("b"), label("c"))]
    for i in range(5):
        for j in range(2):
            last.append((res((3 * j, i), mod), res((3 * j + 1, 3 + i), mod), res((3 * j + 2, i), mod)))
    classes = _developed_class(P, 3, (0, 1), 5) + [FactorClass.of(UNIFORM, last, 3)]
    classes += _developed_class(Q, 11, (3, 1), 10)
    return Certificate.build(HostGraph.complete(verts), classes,
                             {"fixture": "L4.5", "printed": _printed({"P": P_K33, "Q": Q_K33})})


def _k35() -> Certificate:
    mod = (5, 7)
    verts = [res((x, i), mod) for x in range(5) for i in range(7)]
    P = [parse_cycle(c, mod) for c in P_K35]
    Q = [parse_cycle(c, mod) for c in Q_K35]
    classes = _developed_class(P, 5, (0, 1), 7)
    classes += [_single_orbit_factor(parse_cycle(c, mod), (0, 1), 7, 5) for c in EXTRA_K35]
    classes += _developed_class(Q, 7, (0, 1), 7)
    # Cay(Z_5 x Z_7, {0} x {+-2}): each column walked in steps of 2
    classes.append(FactorClass.of(UNIFORM, [[res((x, 2 * i), mod) for i in range(7)] for x in range(5)], 7))
    return Certificate.build(HostGraph.complete(verts), classes,
                             {"fixture": "L4.6",
                              "printed": _printed({"P": P_K35, "extra": EXTRA_K35, "Q": Q_K35})})


def _k39() -> Certificate:
    mod = (13, 3)
    verts = [res((x, i), mod) for x in range(13) for i in range(3)]
    classes = _zero_block_13x3() + _triangle_family_13x3()
    classes += [_single_orbit_factor(parse_cycle(c, mod), (0, 1), 3, 13) for c in Q_K39]
    return Certificate.build(HostGraph.complete(verts), classes,
                             {"fixture": "L4.7", "printed": _printed({"F": [TRIANGLE_13x3], "Q": Q_K39})})


def _cay_17_35() -> Certificate:
    from .cayley import construction_2l

    return construction_2l(17, 1, 14).with_provenance(fixture="L3.11")


# name -> (builder, host description, (m, n), (alpha, beta))
FIXTURES: dict[str, tuple[Callable[[], Certificate], str, tuple[int, int], tuple[int, int]]] = {
    "L4.1": (_c3_11, "C_3[11]", (3, 11), (6, 5)),
    "L4.2": (_c3_13, "C_3[13]", (3, 13), (8, 5)),
    "L4.3": (_c3_15, "C_3[15]", (3, 15), (8, 7)),
    "L4.5": (_k33, "K_33", (3, 11), (6, 10)),
    "L4.6": (_k35, "K_35", (5, 7), (9, 8)),
    "L4.7": (_k39, "K_39", (3, 13), (8, 11)),
    "L3.11": (_cay_17_35, "Cay(Z_17 x Z_35, {+-1} x (Z_35 - 0))", (17, 35), (28, 6)),
}

_built: dict[str, Certificate] = {}


def fixture(name: str) -> Certificate:
    """Expand a stored design and verify it has the stated profile."""
    if name not in FIXTURES:
        raise Rejected(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}", "UNKNOWN_FIXTURE")
    if name not in _built:
        build, _, (m, n), (alpha, beta) = FIXTURES[name]
        cert = require_valid(build())
        if cert.hw_counts(m, n) != (alpha, beta) or len(cert.classes) != alpha + beta:
            raise Rejected(f"{name} has profile {cert.profile}, expected ({alpha}, {beta})", "PROFILE_MISMATCH")
        _built[name] = cert
    return _built[name]
