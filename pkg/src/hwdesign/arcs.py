"""Almost resolvable k-cycle systems.

Base-cycle templates for orders 2k+1 and 6k+1, their development into full
designs, frame filling for orders 2kt+1 with t >= 4, and the dispatcher.

Templates are written with unreduced integer coordinates, exactly as they
read in the tables, and reduced only when turned into vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import MissingIngredient, Nonexistent, OpenCase, Rejected, Unsupported
from .model import (
    ALMOST,
    HALF,
    INF,
    Certificate,
    FactorClass,
    HostGraph,
    Vertex,
    res,
)
from .verify import check_alignment, check_certificate, check_frame, check_lemma_conditions, require_valid

Raw = object  # "inf" or an (x, level) pair of unreduced ints
I = "inf"


def run(gen: Callable[[int], list], last: tuple[int, int], limit: int = 10_000) -> list:
    """Expand an indexed block ``gen(0), gen(1), ...`` up to the block ending in ``last``.

    An empty expansion is allowed: it happens when ``gen(-1)`` already ends in
    ``last`` (the smallest members of a family).
    """
    for count in range(0, limit):
        if gen(count - 1)[-1] == last:
            out: list = []
            for i in range(count):
                out.extend(gen(i))
            return out
    raise Rejected(f"block never reaches {last}", "REJECT_TEMPLATE")


@dataclass(frozen=True)
class ArcsTemplate:
    k: int
    d: int
    variant: str
    cycles: tuple[tuple[Raw, ...], ...]
    subcase: str

    @property
    def modulus(self) -> int:
        return self.k if self.variant == "A" else 3 * self.k

    def vertex(self, raw: Raw) -> Vertex:
        if raw == I:
            return INF
        x, j = raw
        return res((x, j), (self.modulus, 2))

    def base_class(self) -> FactorClass:
        missing = res((0, 1), (self.modulus, 2))
        return FactorClass.of(ALMOST, [[self.vertex(r) for r in c] for c in self.cycles], self.k, missing)


# ---------------------------------------------------------------------------
# order 2k+1


def base_cycles_2k1(k: int) -> ArcsTemplate:
    if k % 2 == 0 or k < 9:
        raise Unsupported(f"the 2k+1 template needs odd k >= 9, got {k}")
    if k % 4 == 1:
        n = (k - 1) // 4
        c1 = (
            run(lambda i: [(n - i, 0), (-(n - i), 1)], (-1, 1))
            + [(0, 0)]
            + run(lambda i: [(1 + i, 1), (-(1 + i), 0)], (-n, 0))
        )
        c2 = (
            [I]
            + run(lambda i: [(-(2 * n - i), 0), (2 * n - i, 0)], (n + 1, 0))
            + run(lambda i: [(n + 1 + i, 1), (-(n + 1 + i), 1)], (-2 * n, 1))
        )
        return ArcsTemplate(k, 2 * n, "A", (tuple(c1), tuple(c2)), "k=1 mod 4")
    n = (k - 3) // 4
    c1 = (
        run(lambda i: [(-(2 + 2 * i), 0), (2 + 2 * i, 1)], (2 * n, 1))
        + run(lambda i: [(2 * n - 2 * i, 0), (-(2 * n - 2 * i), 1)], (-2, 1))
        + [(-1, 0), (1, 1), (0, 0)]
    )
    c2 = (
        [I]
        + run(lambda i: [(2 * n + 1 - 2 * i, 0), (-(2 * n + 1 - 2 * i), 0)], (-3, 0))
        + [(1, 0), (-1, 1)]
        + run(lambda i: [(3 + 2 * i, 1), (-(3 + 2 * i), 1)], (-(2 * n + 1), 1))
    )
    return ArcsTemplate(k, 2, "A", (tuple(c1), tuple(c2)), "k=3 mod 4")


# ---------------------------------------------------------------------------
# order 6k+1, k = 1 mod 4

_SPECIAL_1 = {
    9: (
        [I, (2, 1), (1, 1), (-1, 1), (1, 0), (-13, 1), (0, 0), (-1, 0), (2, 0)],
        [(-13, 0), (-11, 0), (11, 1), (12, 0), (-12, 1), (-12, 0), (12, 1), (11, 0), (-11, 1)],
    ),
    13: (
        [I, (3, 1), (-2, 1), (2, 1), (1, 1), (-1, 1), (1, 0), (-19, 1), (0, 0), (-1, 0), (2, 0), (-2, 0), (3, 0)],
        [(-19, 0), (-17, 0), (17, 1), (16, 0), (-16, 1), (-18, 0), (-18, 1), (17, 0), (-17, 1), (19, 0),
         (16, 1), (-16, 0), (19, 1)],
    ),
    17: (
        [I, (4, 1), (-3, 1), (3, 1), (-2, 1), (2, 1), (1, 1), (-1, 1), (1, 0), (-25, 1), (0, 0), (-1, 0), (2, 0),
         (-2, 0), (3, 0), (-3, 0), (4, 0)],
        [(-25, 0), (-23, 0), (22, 1), (-22, 0), (24, 1), (25, 0), (21, 1), (-21, 0), (-24, 1), (-24, 0),
         (-21, 1), (21, 0), (25, 1), (24, 0), (-22, 1), (22, 0), (-23, 1)],
    ),
}


def _six_1(k: int) -> tuple[list, str]:
    n = (k - 1) // 4
    c1 = run(lambda i: [(3 * n + 1 + i, 0), (-(3 * n + 1 + i), 0)], (-5 * n, 0)) + [(5 * n + 3, 0)]
    c2 = run(lambda i: [(3 * n + 1 + i, 1), (-(3 * n + 1 + i), 1)], (-5 * n, 1)) + [(5 * n + 3, 1)]
    c3 = run(lambda i: [(n + 1 + i, 0), (-(n + 1 + i), 1)], (-3 * n, 1)) + [(-n, 0)]
    c4 = run(lambda i: [(n + 1 + i, 1), (-(n + 1 + i), 0)], (-3 * n, 0)) + [(-n, 1)]
    if k in _SPECIAL_1:
        c5, c6 = _SPECIAL_1[k]
        return [c1, c2, c3, c4, list(c5), list(c6)], f"special k={k}"
    c5 = (
        [I, (n, 1)]
        + run(lambda i: [(-(n - 1 - i), 1), (n - 1 - i, 1)], (2, 1))
        + [(1, 1), (-1, 1)]
        + [(1, 0), (-(6 * n + 1), 1), (0, 0), (-1, 0)]
        + run(lambda i: [(2 + i, 0), (-(2 + i), 0)], (-(n - 1), 0))
        + [(n, 0)]
    )
    N = 6 * n
    if k % 12 == 1:
        c6 = (
            [(-(N + 1), 0), (-(N - 1), 0)]
            + run(lambda i: [(N - 5 - 3 * i, 1), (-(N - 4 - 3 * i), 0)], (-(5 * n + 5), 0))
            + [(5 * n + 1, 1), (-(5 * n + 1), 0)]
            + run(lambda i: [(5 * n + 6 + 3 * i, 1), (-(5 * n + 4 + 3 * i), 0)], (-(N - 5), 0))
            + [(N + 1, 1), (-(N - 2), 0), (N - 1, 1), (N, 0), (-N, 1), (N - 2, 0)]
            + run(lambda i: [(-(N - 3 - 3 * i), 1), (N - 4 - 3 * i, 0)], (5 * n + 5, 0))
            + [(-(5 * n + 3), 1), (5 * n + 2, 0), (-(5 * n + 2), 1), (-(5 * n + 2), 0), (5 * n + 2, 1),
               (-(5 * n + 3), 0)]
            + run(lambda i: [(5 * n + 5 + 3 * i, 1), (-(5 * n + 6 + 3 * i), 0)], (-(N - 3), 0))
            + [(N - 2, 1), (-N, 0), (N, 1), (N - 1, 0), (-(N - 2), 1), (N + 1, 0)]
            + run(lambda i: [(-(N - 5 - 3 * i), 1), (N - 3 - 3 * i, 0)], (5 * n + 6, 0))
            + [(-(5 * n + 1), 1), (5 * n + 1, 0)]
            + run(lambda i: [(-(5 * n + 5 + 3 * i), 1), (5 * n + 4 + 3 * i, 0)], (N - 5, 0))
            + [(-(N - 1), 1)]
        )
        tag = "k=1 mod 12"
    elif k % 12 == 5:
        c6 = (
            [(-(N + 1), 0), (-(N - 1), 0)]
            + run(lambda i: [(N - 6 - 3 * i, 1), (-(N - 5 - 3 * i), 0)], (-(5 * n + 5), 0))
            + [(5 * n + 1, 1), (-(5 * n + 1), 0)]
            + run(lambda i: [(5 * n + 6 + 3 * i, 1), (-(5 * n + 4 + 3 * i), 0)], (-(N - 6), 0))
            + [(N - 2, 1), (-N, 0), (N, 1), (N - 1, 0), (-(N - 3), 1), (N - 3, 0), (-(N - 2), 1), (N + 1, 0)]
            + run(lambda i: [(-(N - 4 - 3 * i), 1), (N - 5 - 3 * i, 0)], (5 * n + 5, 0))
            + [(-(5 * n + 3), 1), (5 * n + 2, 0), (-(5 * n + 2), 1), (-(5 * n + 2), 0), (5 * n + 2, 1),
               (-(5 * n + 3), 0)]
            + run(lambda i: [(5 * n + 5 + 3 * i, 1), (-(5 * n + 6 + 3 * i), 0)], (-(N - 4), 0))
            + [(N + 1, 1), (-(N - 2), 0), (N - 3, 1), (-(N - 3), 0), (N - 1, 1), (N, 0), (-N, 1), (N - 2, 0)]
            + run(lambda i: [(-(N - 6 - 3 * i), 1), (N - 4 - 3 * i, 0)], (5 * n + 6, 0))
            + [(-(5 * n + 1), 1), (5 * n + 1, 0)]
            + run(lambda i: [(-(5 * n + 5 + 3 * i), 1), (5 * n + 4 + 3 * i, 0)], (N - 6, 0))
            + [(-(N - 1), 1)]
        )
        tag = "k=5 mod 12"
    else:
        c6 = (
            [(-(N + 1), 0), (-(N - 1), 0), (N - 1, 1), (N, 0), (-N, 1)]
            + run(lambda i: [(N - 4 - 3 * i, 0), (-(N - 3 - 3 * i), 1)], (-(5 * n + 5), 1))
            + [(5 * n + 1, 0), (-(5 * n + 1), 1)]
            + run(lambda i: [(5 * n + 6 + 3 * i, 0), (-(5 * n + 4 + 3 * i), 1)], (-(N - 4), 1))
            + [(N + 1, 0)]
            + run(lambda i: [(-(N - 2 - 3 * i), 1), (N - 3 - 3 * i, 0)], (5 * n + 5, 0))
            + [(-(5 * n + 3), 1), (5 * n + 2, 0), (-(5 * n + 2), 1), (-(5 * n + 2), 0), (5 * n + 2, 1),
               (-(5 * n + 3), 0)]
            + run(lambda i: [(5 * n + 5 + 3 * i, 1), (-(5 * n + 6 + 3 * i), 0)], (-(N - 2), 0))
            + [(N + 1, 1)]
            + run(lambda i: [(-(N - 4 - 3 * i), 0), (N - 2 - 3 * i, 1)], (5 * n + 6, 1))
            + [(-(5 * n + 1), 0), (5 * n + 1, 1)]
            + run(lambda i: [(-(5 * n + 5 + 3 * i), 0), (5 * n + 4 + 3 * i, 1)], (N - 4, 1))
            + [(-N, 0), (N, 1), (N - 1, 0), (-(N - 1), 1)]
        )
        tag = "k=9 mod 12"
    return [c1, c2, c3, c4, c5, c6], tag


# ---------------------------------------------------------------------------
# order 6k+1, k = 3 mod 4

_SPECIAL_3 = {
    11: (
        [I, (-2, 1), (2, 1), (1, 1), (3, 1), (-3, 0), (-3, 1), (3, 0), (1, 0), (-2, 0), (2, 0)],
        [(16, 0), (-16, 0), (15, 1), (-15, 0), (14, 1), (15, 0), (-15, 1), (14, 0), (16, 1), (0, 0), (-16, 1)],
    ),
    15: (
        [I, (2, 1), (3, 1), (-3, 1), (1, 1), (-1, 1), (4, 1), (-4, 0), (-4, 1), (4, 0), (1, 0), (-1, 0), (3, 0),
         (-3, 0), (2, 0)],
        [(22, 0), (-22, 0), (21, 1), (-21, 0), (20, 1), (-20, 0), (19, 1), (20, 0), (-20, 1), (19, 0), (-22, 1),
         (0, 0), (22, 1), (21, 0), (-21, 1)],
    ),
    19: (
        [I, (-2, 1), (2, 1), (1, 1), (3, 1), (-4, 1), (4, 1), (-1, 1), (5, 1), (-5, 0), (-5, 1), (5, 0), (-2, 0),
         (1, 0), (3, 0), (-1, 0), (4, 0), (-4, 0), (2, 0)],
        [(28, 0), (-28, 0), (27, 1), (-27, 0), (26, 1), (-26, 0), (25, 1), (-25, 0), (24, 1), (25, 0), (-25, 1),
         (24, 0), (-27, 1), (27, 0), (-26, 1), (26, 0), (28, 1), (0, 0), (-28, 1)],
    ),
}


def _six_3(k: int) -> tuple[list, str]:
    n = (k - 3) // 4
    c1 = run(lambda i: [(n + 2 + i, 0), (-(n + 2 + i), 0)], (-(3 * n + 2), 0)) + [(-(n - 1), 0)]
    c2 = run(lambda i: [(n + 2 + i, 1), (-(n + 2 + i), 1)], (-(3 * n + 2), 1)) + [(-(n - 1), 1)]
    c3 = run(lambda i: [(5 * n + 3 - i, 0), (-(5 * n + 3 - i), 1)], (-(3 * n + 3), 1)) + [(-(5 * n + 4), 0)]
    c4 = run(lambda i: [(5 * n + 3 - i, 1), (-(5 * n + 3 - i), 0)], (-(3 * n + 3), 0)) + [(-(5 * n + 4), 1)]
    if k in _SPECIAL_3:
        c5, c6 = _SPECIAL_3[k]
        return [c1, c2, c3, c4, list(c5), list(c6)], f"special k={k}"
    if k % 12 == 3:
        c5 = (
            [I, (2, 1), (3, 1), (-3, 1), (1, 1), (-1, 1), (4, 1)]
            + run(lambda i: [(-(4 + 3 * i), 1), (6 + 3 * i, 1), (-(6 + 3 * i), 1), (5 + 3 * i, 1),
                             (-(2 + 3 * i), 1), (7 + 3 * i, 1)], (n + 1, 1))
            + [(-(n + 1), 0), (-(n + 1), 1)]
            + run(lambda i: [(n + 1 - 3 * i, 0), (-(n - 4 - 3 * i), 0), (n - 1 - 3 * i, 0), (-(n - 3 * i), 0),
                             (n - 3 * i, 0), (-(n - 2 - 3 * i), 0)], (-4, 0))
            + [(4, 0)]
            + [(1, 0), (-1, 0), (3, 0), (-3, 0), (2, 0)]
        )
        tag5 = "k=3 mod 12"
    elif k % 12 == 7:
        c5 = (
            [I, (-2, 1), (2, 1), (1, 1), (3, 1), (-4, 1), (4, 1), (-1, 1), (5, 1)]
            + run(lambda i: [(-(7 + 3 * i), 1), (7 + 3 * i, 1), (-(3 + 3 * i), 1), (6 + 3 * i, 1),
                             (-(5 + 3 * i), 1), (8 + 3 * i, 1)], (n + 1, 1))
            + [(-(n + 1), 0), (-(n + 1), 1)]
            + run(lambda i: [(n + 1 - 3 * i, 0), (-(n - 2 - 3 * i), 0), (n - 1 - 3 * i, 0), (-(n - 4 - 3 * i), 0),
                             (n - 3 * i, 0), (-(n - 3 * i), 0)], (-7, 0))
            + [(5, 0)]
            + [(-1, 0), (4, 0), (-4, 0), (3, 0), (1, 0), (-2, 0), (2, 0)]
        )
        tag5 = "k=7 mod 12"
    else:
        c5 = (
            [I, (-2, 1), (2, 1), (1, 1), (3, 1)]
            + run(lambda i: [(-(5 + 3 * i), 1), (5 + 3 * i, 1), (-(1 + 3 * i), 1), (4 + 3 * i, 1),
                             (-(3 + 3 * i), 1), (6 + 3 * i, 1)], (n + 1, 1))
            + [(-(n + 1), 0), (-(n + 1), 1)]
            + run(lambda i: [(n + 1 - 3 * i, 0), (-(n - 2 - 3 * i), 0), (n - 1 - 3 * i, 0), (-(n - 4 - 3 * i), 0),
                             (n - 3 * i, 0), (-(n - 3 * i), 0)], (-5, 0))
            + [(3, 0), (1, 0), (-2, 0), (2, 0)]
        )
        tag5 = "k=11 mod 12"
    N = 6 * n
    head = (
        [(N + 4, 0), (-(N + 4), 0)]
        + run(lambda i: [(N + 3 - i, 1), (-(N + 3 - i), 0)], (-(5 * n + 5), 0))
        + [(5 * n + 4, 1), (5 * n + 5, 0), (-(5 * n + 5), 1), (5 * n + 4, 0)]
    )
    block = lambda i: [(-(5 * n + 7 + 2 * i), 1), (5 * n + 7 + 2 * i, 0), (-(5 * n + 6 + 2 * i), 1),
                       (5 * n + 6 + 2 * i, 0)]
    if k % 8 == 3:
        c6 = head + run(block, (N + 2, 0)) + [(N + 4, 1), (0, 0), (-(N + 4), 1)]
        tag6 = "k=3 mod 8"
    else:
        c6 = head + run(block, (N + 1, 0)) + [(-(N + 4), 1), (0, 0), (N + 4, 1), (N + 3, 0), (-(N + 3), 1)]
        tag6 = "k=7 mod 8"
    return [c1, c2, c3, c4, c5, c6], f"{tag5}, {tag6}"


def base_cycles_6k1(k: int) -> ArcsTemplate:
    if k % 2 == 0 or k < 9:
        raise Unsupported(f"the 6k+1 template needs odd k >= 9, got {k}")
    cycles, tag = _six_1(k) if k % 4 == 1 else _six_3(k)
    return ArcsTemplate(k, 3, "B", tuple(tuple(c) for c in cycles), tag)


# ---------------------------------------------------------------------------
# development into designs


def arcs_host(u: int, extra: Sequence[Vertex] = (INF,)) -> HostGraph:
    return HostGraph.complete([res((x, j), (u, 2)) for x in range(u) for j in range(2)] + list(extra))


def expand_arcs(template: ArcsTemplate) -> Certificate:
    """All almost parallel classes from the base class plus the half class."""
    k, d, u = template.k, template.d, template.modulus
    base = template.base_class()
    report = check_lemma_conditions(base, template.variant, k, d)
    if not report.ok:
        raise Rejected(f"template k={k} ({template.subcase}) fails the conditions:\n" + report.summary(),
                       "REJECT_TEMPLATE")
    classes = [base.translate((i, 0)) for i in range(u)]
    if template.variant == "A":
        half = [[res((j * d, 1), (u, 2)) for j in range(k)]]
    else:
        half = [[res((3 * j + s, 1), (u, 2)) for j in range(k)] for s in range(3)]
    classes.append(FactorClass.of(HALF, half, k))
    order = 2 * u + 1
    printed = [" ".join("inf" if r == I else f"({r[0]},{r[1]})" for r in c) for c in template.cycles]
    cert = Certificate.build(
        arcs_host(u),
        classes,
        {"construction": "arcs_template", "k": k, "v": order, "variant": template.variant,
         "d": d, "subcase": template.subcase, "printed": {"0": printed}},
    )
    return require_valid(cert)


# ---------------------------------------------------------------------------
# frames


def frame_parts(cert: Certificate) -> list[tuple[Vertex, ...]]:
    if cert.host.kind != "multipartite":
        raise Rejected("frame host must be multipartite", "REJECT_HOST")
    return list(cert.host.parts)


def fill_frame(frame: Certificate, bases: Sequence[Certificate]) -> Certificate:
    """Fill each part of a (k,1)-frame of type (2k)^t with a k-ARCS(2k+1) through a common inf."""
    parts = frame_parts(frame)
    t = len(parts)
    if len(bases) != t:
        raise Rejected(f"{t} parts but {len(bases)} base designs", "REJECT_COUNTS")
    if not frame.classes:
        raise Rejected("empty frame", "REJECT_COUNTS")
    k = frame.classes[0].k
    rep = check_frame(frame, parts, k)
    if not rep.ok:
        raise Rejected("frame does not verify:\n" + rep.summary(), "REJECT_FRAME")
    by_part: dict[int, list[FactorClass]] = {i: [] for i in range(t)}
    for cls in frame.classes:
        covered = set(cls.vertices())
        hole = next(i for i, p in enumerate(parts) if not covered.intersection(p))
        by_part[hole].append(cls)
    classes: list[FactorClass] = []
    half_cycles: list[tuple[Vertex, ...]] = []
    for i, base in enumerate(bases):
        if not check_certificate(base).ok or not check_alignment(base):
            raise Rejected(f"base design {i} is not a verified aligned ARCS", "REJECT_BASE")
        aps = [c for c in base.classes if c.kind == ALMOST]
        halves = [c for c in base.classes if c.kind == HALF]
        if len(aps) != k or len(by_part[i]) != k or len(parts[i]) != 2 * k:
            raise Rejected(
                f"part {i}: {len(by_part[i])} holey classes, {len(aps)} base classes, k={k}", "REJECT_COUNTS"
            )
        if INF in halves[0].vertices():
            raise Rejected("base half class passes through inf", "REJECT_BASE")
        finite = sorted(v for v in base.host.vertex_set() if v != INF)
        mapping = dict(zip(finite, sorted(parts[i])))
        mapping[INF] = INF
        for holey, ap in zip(by_part[i], aps):
            placed = ap.relabel(mapping)
            classes.append(FactorClass.of(ALMOST, list(holey.cycles) + list(placed.cycles), k, placed.missing))
        half_cycles.extend(halves[0].relabel(mapping).cycles)
    classes.append(FactorClass.of(HALF, half_cycles, k))
    vertices = [v for p in parts for v in p] + [INF]
    cert = Certificate.build(
        HostGraph.complete(vertices),
        classes,
        {"construction": "frame_fill", "k": k, "t": t, "v": 2 * k * t + 1,
         "frame": frame.provenance, "base": bases[0].provenance},
    )
    return require_valid(cert)


# ---------------------------------------------------------------------------
# dispatcher

NONEXISTENT_ORDERS = {(3, 7), (3, 13), (4, 9)}
OPEN_ORDERS = {(8, 33), (14, 57)}


def build_arcs(k: int, t: int, budget: int | None = None) -> Certificate:
    """A verified k-ARCS(2kt+1), or a classification explaining why none is produced."""
    if k < 3 or t < 1:
        raise Rejected(f"need k >= 3 and t >= 1, got k={k}, t={t}", "REJECT_PARAMS")
    v = 2 * k * t + 1
    if (k, v) in NONEXISTENT_ORDERS:
        raise Nonexistent(f"no {k}-ARCS({v}) exists", "Theorem 1.2 exception")
    if (k, v) in OPEN_ORDERS:
        raise OpenCase(f"{k}-ARCS({v}) is unresolved", "Theorem 1.2 possible exception")
    if k % 2 == 1 and k >= 9 and t == 1:
        return expand_arcs(base_cycles_2k1(k))
    if k % 2 == 1 and k >= 9 and t == 3:
        return expand_arcs(base_cycles_6k1(k))
    from . import search  # deferred: search imports this module

    cached = search.load_cached("arcs", k=k, t=t)
    if cached is not None:
        return cached
    if k % 2 == 1 and k >= 5 and t >= 4:
        frame = search.search_frame(k, 2 * k, t, budget=budget)
        base = build_arcs(k, 1, budget=budget)
        return fill_frame(frame, [base] * t)
    if k % 2 == 1 and t == 1 and k in (5, 7):
        return search.search_arcs_2k1(k, budget=budget)
    if k % 2 == 1 and t == 2 and k >= 11:
        raise OpenCase(f"{k}-ARCS({v}) with t=2 is not covered", "Theorem 2.9 excludes t=2")
    raise MissingIngredient([f"{k}-ARCS({v})"], "exists by Theorem 1.2/2.10 but no construction is implemented")
