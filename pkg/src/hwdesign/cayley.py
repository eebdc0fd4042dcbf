"""Factorizations of Cayley graphs on Z_m x Z_n.

Most hosts here have connection set {+-1} x S. An edge ((x, y), (x+1, y+delta))
uses the *forward class* delta; a block of factors is described by the
multiset of forward classes it consumes. Rows of differences developed by
(0, +1) give C_m-factors; C_n-factors come from the difference blocks below.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .errors import NecessaryFail, NotFound, Rejected
from .model import (
    HALF,
    ONE_FACTOR,
    UNIFORM,
    ALMOST,
    Certificate,
    FactorClass,
    HostGraph,
    Vertex,
    res,
)
from .verify import check_alignment, check_certificate, require_valid

log = logging.getLogger(__name__)


def forward_host(m: int, n: int, forward: Iterable[int]) -> HostGraph:
    """Cay(Z_m x Z_n, {(1, d), (-1, -d) : d in forward})."""
    conn = []
    for d in forward:
        conn += [(1, d), (-1, -d)]
    return HostGraph.cayley((m, n), conn)


def forward_classes(cls: FactorClass, m: int, n: int) -> Counter:
    """Forward classes used by a class whose edges all step x by +-1."""
    out: Counter = Counter()
    for a, b in cls.edges():
        (xa, ya), (xb, yb) = a.coords, b.coords
        if (xb - xa) % m == 1:
            out[(yb - ya) % n] += 1
        elif (xa - xb) % m == 1:
            out[(ya - yb) % n] += 1
        else:
            raise Rejected(f"edge {a}-{b} does not step the first coordinate by 1", "REJECT_EDGE")
    return out


def _verified(m: int, n: int, forward: Iterable[int], classes: Sequence[FactorClass], what: str) -> list[FactorClass]:
    cert = Certificate.build(forward_host(m, n, forward), classes)
    rep = check_certificate(cert)
    if not rep.ok:
        raise Rejected(f"{what} failed verification:\n" + rep.summary(), "INVALID")
    return list(classes)


# ---------------------------------------------------------------------------
# rows


@dataclass(frozen=True)
class BaseRowTable:
    """Rows b_1..b_{m-1} in Z_n; row j is the cycle ((0,0),(1,b_1),...,(m-1,b_{m-1}))."""

    m: int
    n: int
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_increments(cls, m: int, n: int, increments: Iterable[Sequence[int]]) -> BaseRowTable:
        rows = []
        for inc in increments:
            if len(inc) not in (m - 1, m):
                raise Rejected(f"increment row has length {len(inc)}, want {m - 1} or {m}", "REJECT_ROW")
            if len(inc) == m and sum(inc) % n:
                raise Rejected(f"increments {tuple(inc)} do not close up mod {n}", "REJECT_ROW")
            b, acc = [], 0
            for a in inc[: m - 1]:
                acc += a
                b.append(acc % n)
            rows.append(tuple(b))
        return cls(m, n, tuple(rows))

    def increments(self) -> list[tuple[int, ...]]:
        """Forward classes of each row, closing edge included (m per row)."""
        out = []
        for b in self.rows:
            full = (0,) + b + (0,)
            out.append(tuple((full[i + 1] - full[i]) % self.n for i in range(self.m)))
        return out

    def consumed(self) -> Counter:
        """Forward-class multiset of the developed factors (n edges per entry)."""
        out: Counter = Counter()
        for inc in self.increments():
            for d in inc:
                out[d] += self.n
        return out


def develop_rows(table: BaseRowTable) -> list[FactorClass]:
    """One C_m-factor per row: the row cycle and its translates by (0, i)."""
    m, n = table.m, table.n
    if m < 3:
        raise Rejected("rows need m >= 3", "REJECT_ROW")
    for r in table.rows:
        if len(r) != m - 1:
            raise Rejected(f"row {r} has length {len(r)}, want {m - 1}", "REJECT_ROW")
    out = []
    for b in table.rows:
        base = [res((0, 0), (m, n))] + [res((x + 1, y), (m, n)) for x, y in enumerate(b)]
        cycles = [[v.shift((0, s)) for v in base] for s in range(n)]
        out.append(FactorClass.of(UNIFORM, cycles, m))
    return out


def rows_for_classes(m: int, n: int, forward: Sequence[int], budget=None, seed: int = 0) -> BaseRowTable:
    """Search rows so that every position uses ``forward`` exactly once."""
    from . import search

    cached = search.load_cached("rows", m=m, n=n, fw=sorted(d % n for d in forward))
    if cached is not None:
        return BaseRowTable(m, n, tuple(tuple(r) for r in cached.provenance["rows"]))
    diff_rows = search.search_base_rows(m, n, forward, len(forward), budget, seed)
    table = BaseRowTable.from_increments(m, n, diff_rows)
    classes = _verified(m, n, forward, develop_rows(table), "row search")
    cert = Certificate.build(forward_host(m, n, forward), classes,
                             {"construction": "rows", "rows": [list(r) for r in table.rows]})
    search.store_cached(cert, "rows", m=m, n=n, fw=sorted(d % n for d in forward))
    return table


# ---------------------------------------------------------------------------
# difference budget


@dataclass
class DifferenceBudget:
    """Forward classes still to be covered, with a log of who took what."""

    m: int
    n: int
    remaining: Counter = field(default_factory=Counter)
    log: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    @classmethod
    def for_classes(cls, m: int, n: int, forward: Iterable[int]) -> DifferenceBudget:
        return cls(m, n, Counter(d % n for d in forward))

    def consume(self, label: str, forward: Iterable[int]) -> None:
        want = Counter(d % self.n for d in forward)
        short = want - self.remaining
        if short:
            raise Rejected(f"{label} needs classes {sorted(short.elements())} that are not available", "REJECT_BUDGET")
        self.remaining -= want
        self.log.append((label, tuple(sorted(want.elements()))))

    @property
    def empty(self) -> bool:
        return not +self.remaining


# ---------------------------------------------------------------------------
# difference blocks realizing C_n-factors


@dataclass(frozen=True)
class DiffRequest:
    kind: str
    params: tuple[int, ...]

    @property
    def label(self) -> str:
        return f"{self.kind}({','.join(map(str, self.params))})"

    def forward(self, n: int) -> list[int]:
        if self.kind == "two_Cn":
            (d,) = self.params
            return [d % n, (-d) % n]
        if self.kind == "four_Cn":
            d1, d2 = self.params
            return [d1 % n, (-d1) % n, d2 % n, (-d2) % n]
        if self.kind == "five_Cm":
            _, a = self.params
            return [0, a % n, (-a) % n, (2 * a) % n, (-2 * a) % n]
        raise Rejected(f"unknown request {self.kind!r}", "REJECT_PARAMS")


def two_Cn(d: int) -> DiffRequest:
    return DiffRequest("two_Cn", (d,))


def four_Cn(d1: int, d2: int) -> DiffRequest:
    return DiffRequest("four_Cn", (d1, d2))


def five_Cm(i: int, a: int) -> DiffRequest:
    return DiffRequest("five_Cm", (i, a))


def difference_factorization(m: int, n: int, request: DiffRequest, budget=None) -> list[FactorClass]:
    """Factor the block of Cay(Z_m x Z_n, ...) named by ``request``; output is verified."""
    if request.kind == "two_Cn":
        (d,) = request.params
        if gcd(d, n) == 1:
            return _verified(m, n, request.forward(n), _two_cn_direct(m, n, d), "two_Cn")
        return transversal_block(m, n, request.forward(n), budget)
    if request.kind == "four_Cn":
        d1, d2 = request.params
        if gcd(d1, n) == 1 and gcd(d2, n) == 1:
            return (difference_factorization(m, n, two_Cn(d1)) + difference_factorization(m, n, two_Cn(d2)))
        return transversal_block(m, n, request.forward(n), budget)
    if request.kind == "five_Cm":
        i, a = request.params
        if gcd(i, m) != 1:
            raise Rejected(f"gcd({i}, {m}) must be 1", "REJECT_PARAMS")
        if n // gcd(a, n) <= 3:
            raise Rejected(f"{a} must have order > 3 in Z_{n}", "REJECT_PARAMS")
        fw = request.forward(n)
        table = rows_for_classes(m, n, fw, budget)
        classes = develop_rows(table)
        if i % m != 1:
            # x -> i*x is an automorphism carrying {+-1} to {+-i}
            conn = [(i * e, e * d) for d in fw for e in (1, -1)]
            mapping = {res((x, y), (m, n)): res((i * x, y), (m, n)) for x in range(m) for y in range(n)}
            classes = [c.relabel(mapping) for c in classes]
            cert = Certificate.build(HostGraph.cayley((m, n), conn), classes)
            require_valid(cert)
            return classes
        return _verified(m, n, fw, classes, "five_Cm")
    raise Rejected(f"unknown request {request.kind!r}", "REJECT_PARAMS")


def _two_cn_direct(m: int, n: int, d: int) -> list[FactorClass]:
    """Two C_n-factors on {+-1} x {+-d}, gcd(d, n) = 1, n >= m both odd.

    The base cycle runs through (X_i, i*d); X climbs for (n+m)/2 steps and
    falls for (n-m)/2, closing up mod m. Its x-translates form a factor; the
    mirrored walk (signs negated) takes exactly the remaining edges.
    """
    if n < m or (n - m) % 2:
        raise Rejected(f"direct two_Cn needs n >= m of equal parity, got m={m}, n={n}", "REJECT_PARAMS")
    up = (n + m) // 2
    out = []
    for sign in (1, -1):
        xs, x = [], 0
        for i in range(n):
            xs.append(x)
            x += sign if i < up else -sign
        base = [res((xs[i], i * d), (m, n)) for i in range(n)]
        out.append(FactorClass.of(UNIFORM, [[v.shift((s, 0)) for v in base] for s in range(m)], n))
    return out


def transversal_block(m: int, n: int, forward: Sequence[int], budget=None) -> list[FactorClass]:
    """C_n-factors invariant under (1, 0), one per forward class (searched, cached)."""
    from . import search

    fw = sorted(d % n for d in forward)
    cached = search.load_cached("transversal", m=m, n=n, fw=fw)
    if cached is not None:
        return list(cached.classes)
    bases = search.search_transversal(m, n, fw, len(fw), budget)
    classes = _verified(m, n, fw, search.transversal_factors(m, n, bases), "transversal block")
    search.store_cached(Certificate.build(forward_host(m, n, fw), classes, {"construction": "transversal"}),
                        "transversal", m=m, n=n, fw=fw)
    return classes


def orbit_block(m: int, n: int, forward: Sequence[int], length: int, budget=None) -> list[FactorClass]:
    """C_length-factors on forward classes ``forward``, one factor developed under a cyclic subgroup.

    Uses translation by (1, 0) when |forward| = m, else by (0, n/|forward|).
    """
    from . import search

    fw = sorted(d % n for d in forward)
    c = len(fw)
    if sorted(fw) != sorted((-d) % n for d in fw):
        raise Rejected("orbit blocks need a symmetric class set", "REJECT_PARAMS")
    cached = search.load_cached("orbit", m=m, n=n, fw=fw, length=length)
    if cached is not None:
        return list(cached.classes)
    steps = ([(1, 0)] if c == m else []) + ([(0, n // c)] if n % c == 0 else [])
    if not steps:
        raise NotFound(f"no cyclic subgroup of order {c} acts on the edge orbits of Z_{m} x Z_{n}")
    halves = sorted({min(d, n - d) for d in fw})
    total = search._budget(budget)
    share = search.Budget(total.nodes // len(steps), total.seconds / len(steps))
    for step in steps:
        try:
            cycles = search.search_orbit_factor(m, n, length, halves, step, c, share)
            break
        except NotFound:
            if step == steps[-1]:
                raise
    base = FactorClass.of(UNIFORM, cycles, length)
    classes = [base.translate((i * step[0], i * step[1])) for i in range(c)]
    classes = _verified(m, n, fw, classes, "orbit block")
    search.store_cached(Certificate.build(forward_host(m, n, fw), classes, {"construction": "orbit", "step": list(step)}),
                        "orbit", m=m, n=n, fw=fw, length=length)
    return classes


def zero_block_cn(m: int, n: int, budget=None) -> tuple[list[FactorClass], list[str]]:
    """Five C_n-factors on {+-1} x (+-{0,1,2}); returns the factors and how they were split.

    Tries the whole block under one cyclic group of order 5, then {0,+-1} under a
    group of order 3 next to two_Cn(2). The first realization found wins.
    """
    five = [0, 1, 2, n - 1, n - 2]
    three = [0, 1, n - 1]
    plans = []
    if m == 5 or n % 5 == 0:
        plans.append((five, ["orbit{0,+-1,+-2}"]))
    if m == 3 or n % 3 == 0:
        plans.append((three, ["orbit{0,+-1}", "two_Cn(2)"]))
    for fw, how in plans:
        try:
            block = orbit_block(m, n, fw, n, budget)
        except NotFound as exc:
            log.info("zero block: %s", exc)
            continue
        if len(fw) == 3:
            block = block + difference_factorization(m, n, two_Cn(2))
        return block, how
    raise NotFound(f"no realization of the five-factor zero block for m={m}, n={n}")


# ---------------------------------------------------------------------------
# C_m[n] with two C_m-factors


def lemma_cmn_two(m: int, n: int, budget=None) -> Certificate:
    """(2, n-2) on C_m[n] for odd n >= m >= 3, n = 3 mod 6, n >= 9."""
    if m % 2 == 0 or n % 2 == 0 or m < 3 or n < 9 or n % 6 != 3:
        raise Rejected(f"need odd m >= 3 and n = 3 mod 6, n >= 9; got m={m}, n={n}", "REJECT_PARAMS")
    if m > n:
        raise Rejected(f"need n >= m, got m={m} > n={n}", "REJECT_PARAMS")
    from . import search

    cached = search.load_cached("cmn_two", m=m, n=n)
    if cached is not None:
        return cached
    d = n // 3
    every = list(range(n))
    bud = DifferenceBudget.for_classes(m, n, every)
    classes: list[FactorClass] = []
    plan: list[str] = []

    table = BaseRowTable(m, n, (_alternating(m, d, 2 * d), _alternating(m, -d % n, -2 * d % n)))
    cm = develop_rows(table)
    bud.consume("rows +-d", [d, n - d])
    classes += cm
    plan.append(f"rows +-{d}")

    try:
        zero, how = zero_block_cn(m, n, budget)
    except NotFound:
        # every C_n class left fits one orbit of (1, 0) when there are exactly m of them
        rest = sorted(bud.remaining.elements())
        if len(rest) != m:
            raise
        classes += orbit_block(m, n, rest, n, budget)
        bud.consume("orbit of all C_n classes", rest)
        plan.append(f"orbit{rest}")
        return _finish_cmn_two(m, n, classes, plan)
    bud.consume("zero block", [0, 1, 2, n - 1, n - 2])
    classes += zero
    plan += how

    for j in range(2, (d - 1) // 2 + 1):
        req = four_Cn(2 * j - 1, 2 * j)
        bud.consume(f"four_Cn({2 * j - 1},{2 * j})", req.forward(n))
        classes += difference_factorization(m, n, req, budget)
        plan.append(f"four_Cn({2 * j - 1},{2 * j})")
    upper = (d - 1) // 4 if n % 12 == 3 else (d - 3) // 4
    for j in range(1, upper + 1):
        req = four_Cn(d + 2 * j - 1, d + 2 * j)
        bud.consume(f"four_Cn({d + 2 * j - 1},{d + 2 * j})", req.forward(n))
        classes += difference_factorization(m, n, req, budget)
        plan.append(f"four_Cn({d + 2 * j - 1},{d + 2 * j})")
    if n % 12 == 9:
        h = (n - 1) // 2
        bud.consume(f"two_Cn({h})", [h, n - h])
        classes += difference_factorization(m, n, two_Cn(h), budget)
        plan.append(f"two_Cn({h})")
    if not bud.empty:
        raise Rejected(f"classes left over: {sorted(bud.remaining.elements())}", "REJECT_BUDGET")
    return _finish_cmn_two(m, n, classes, plan)


def _finish_cmn_two(m: int, n: int, classes: list[FactorClass], plan: list[str]) -> Certificate:
    cert = Certificate.build(HostGraph.lex_cycle(m, n), classes,
                             {"construction": "lemma_cmn_two", "m": m, "n": n, "blocks": plan})
    require_valid(cert)
    from . import search

    search.store_cached(cert, "cmn_two", m=m, n=n)
    return cert


def _alternating(m: int, first: int, second: int) -> tuple[int, ...]:
    return tuple(first if t % 2 == 0 else second for t in range(m - 1))


# ---------------------------------------------------------------------------
# C_m[9] with four C_m-factors

CM9_ROWS = ((3, 7, 3, 6), (-3, -7, -3, -6), (5, 2, 8, 4), (-5, -2, -8, -4))


def cm9_table(m: int) -> BaseRowTable:
    """The printed four rows, continued by b_t = b_{t-2}."""
    rows = []
    for r in CM9_ROWS:
        b = list(r)
        while len(b) < m - 1:
            b.append(b[len(b) - 2])
        rows.append(tuple(x % 9 for x in b[: m - 1]))
    return BaseRowTable(m, 9, tuple(rows))


def lemma_cm9(m: int, budget=None) -> Certificate:
    """(4, 5) on C_m[9]."""
    n = 9
    if m % 2 == 0 or m < 5:
        raise Rejected(f"need odd m >= 5, got {m}", "REJECT_PARAMS")
    if m > n:
        raise NecessaryFail(
            f"C_{m}[9] has no 9-cycles: nine steps of +-1 cannot close up mod {m}", "parity of x-steps")
    bud = DifferenceBudget.for_classes(m, n, range(n))
    if m == 5:
        rows = develop_rows(cm9_table(m))
        bud.consume("rows +-{3,4}", [3, 4, 5, 6])
        zero, how = zero_block_cn(m, n, budget)
        bud.consume("zero block", [0, 1, 2, 7, 8])
        classes = rows + zero
        plan = ["rows +-{3,4}"] + how
    else:
        classes, plan = _transversal_allocation(m, n, 4, budget)
        bud.consume("transversal allocation", range(n))
    if not bud.empty:
        raise Rejected(f"classes left over: {sorted(bud.remaining.elements())}", "REJECT_BUDGET")
    cert = Certificate.build(HostGraph.lex_cycle(m, n), classes,
                             {"construction": "lemma_cm9", "m": m, "blocks": plan})
    return require_valid(cert)


def _transversal_allocation(m: int, n: int, rows: int, budget=None) -> tuple[list[FactorClass], list[str]]:
    """Split Z_n into ``rows`` row classes (0 among them) and n-rows transversal classes."""
    from . import search

    for rest in combinations(range(1, n), rows - 1):
        row_fw = (0,) + rest
        if (m * sum(row_fw)) % n:
            continue
        cn_fw = [d for d in range(1, n) if d not in rest]
        try:
            cn = transversal_block(m, n, cn_fw, search.Budget(200_000, 10.0))
            table = rows_for_classes(m, n, row_fw, search.Budget(200_000, 10.0))
        except NotFound:
            continue
        return develop_rows(table) + cn, [f"rows {list(row_fw)}", f"transversal {cn_fw}"]
    raise NotFound(f"no transversal allocation for m={m}, n={n}")


# ---------------------------------------------------------------------------
# constructions on Z_k x Z_{2kt+1} and Z_k x Z_{2u}


def column_host(k: int, q: int) -> HostGraph:
    """Cay(Z_k x Z_q, {0} x (Z_q minus 0) plus {+-1} x {0})."""
    conn = [(0, y) for y in range(1, q)] + [(1, 0), (-1, 0)]
    return HostGraph.cayley((k, q), conn)


def _column(k: int, q: int, j: int) -> tuple[Vertex, ...]:
    return tuple(res((i, j), (k, q)) for i in range(k))


def construction_00(arcs: Certificate) -> Certificate:
    """kt+1 C_k-factors of the column host from an aligned k-ARCS(2kt+1)."""
    aps = [c for c in arcs.classes if c.kind == ALMOST]
    halves = [c for c in arcs.classes if c.kind == HALF]
    if not check_alignment(arcs) or len(halves) != 1:
        raise Rejected("the ARCS is not aligned: missed vertices must be distinct and form the half class",
                       "REJECT_ALIGNMENT")
    require_valid(arcs)
    k = aps[0].k
    verts = sorted(arcs.host.vertex_set())
    q = len(verts)
    if q % (2 * k) != 1:
        raise Rejected(f"order {q} is not 2kt+1 for k={k}", "REJECT_PARAMS")
    kt = (q - 1) // 2
    aps = sorted(aps, key=lambda c: c.missing)
    # per-copy relabeling: class j misses position j, the rest fill kt..2kt
    position = {c.missing: j for j, c in enumerate(aps)}
    rest = [v for v in verts if v not in position]
    for j, v in enumerate(rest):
        position[v] = kt + j
    classes = []
    for j, ap in enumerate(aps):
        cycles = [_column(k, q, j)]
        for i in range(k):
            cycles += [[res((i, position[v]), (k, q)) for v in c] for c in ap.cycles]
        classes.append(FactorClass.of(UNIFORM, cycles, k))
    cycles = [_column(k, q, j) for j in range(kt, q)]
    for i in range(k):
        cycles += [[res((i, position[v]), (k, q)) for v in c] for c in halves[0].cycles]
    classes.append(FactorClass.of(UNIFORM, cycles, k))
    cert = Certificate.build(column_host(k, q), classes,
                             {"construction": "construction_00", "k": k, "t": kt // k,
                              "arcs": arcs.provenance.get("construction", "")})
    return require_valid(cert)


def construction_2ku(frame: Certificate, k: int) -> Certificate:
    """u C_k-factors and a 1-factor of Cay(Z_k x Z_2u, ...) from a (k,1)-CF(2^u)."""
    parts = frame.host.parts
    u = len(parts)
    if any(len(p) != 2 for p in parts):
        raise Rejected("the frame must have parts of size 2", "REJECT_PARAMS")
    if (2 * (u - 1)) % k:
        raise Rejected(f"2(u-1) = {2 * (u - 1)} is not divisible by k={k}", "REJECT_PARAMS")
    require_valid(frame)
    q = 2 * u
    position = {}
    for j, p in enumerate(parts):
        position[p[0]], position[p[1]] = 2 * j, 2 * j + 1
    holey_for = {}
    for c in frame.classes:
        touched = set(c.vertices())
        holes = [j for j, p in enumerate(parts) if not touched.intersection(p)]
        if len(holes) != 1 or holes[0] in holey_for:
            raise Rejected("each part needs exactly one holey factor", "REJECT_PARAMS")
        holey_for[holes[0]] = c
    classes = []
    for j in range(u):
        cycles = [_column(k, q, 2 * j), _column(k, q, 2 * j + 1)]
        for i in range(k):
            cycles += [[res((i, position[v]), (k, q)) for v in c] for c in holey_for[j].cycles]
        classes.append(FactorClass.of(UNIFORM, cycles, k))
    pairs = [(res((i, 2 * j), (k, q)), res((i, 2 * j + 1), (k, q))) for i in range(k) for j in range(u)]
    classes.append(FactorClass.of(ONE_FACTOR, pairs))
    cert = Certificate.build(column_host(k, q), classes, {"construction": "construction_2ku", "k": k, "u": u})
    return require_valid(cert)


# rows 1..14 of the 28 x 17 increment array; rows 15..28 are their negatives
L311_HEAD = (
    (3, -15, 12), (6, 12, -18), (-12, 6, 6), (15, -18, 3), (-18, 3, 15),
    (2, 7, -9), (7, -9, 2), (-9, 2, 7),
    (1, 10, -11), (10, -11, 1), (-11, 1, 10),
    (5, 14, 16), (14, 16, 5), (16, 5, 14),
)


def l311_increments() -> list[tuple[int, ...]]:
    """The full 28 x 17 array: a_i4 = -a_i5 = a_i1, a_ij = a_i,j-2 for j >= 6."""
    head = list(L311_HEAD) + [tuple(-a for a in r) for r in L311_HEAD]
    out = []
    for a1, a2, a3 in head:
        row = [a1, a2, a3, a1, -a1]
        while len(row) < 17:
            row.append(row[-2])
        out.append(tuple(row))
    return out


def _stored_2l(k: int, t: int, l: int) -> BaseRowTable | None:
    if (k, t, l) == (17, 1, 14):
        return BaseRowTable.from_increments(17, 35, l311_increments())
    return None


def construction_2l(k: int, t: int, l: int, budget=None) -> Certificate:
    """2l C_k-factors and 2kt-2l C_{2kt+1}-factors of Cay(Z_k x Z_{2kt+1}, {+-1} x (Z minus 0))."""
    if k % 2 == 0 or k < 3 or t < 1:
        raise Rejected(f"need odd k >= 3 and t >= 1, got k={k}, t={t}", "REJECT_PARAMS")
    kt = k * t
    if l < 0 or l > kt or l in (1, 2, kt - 1, kt):
        raise Rejected(f"l={l} is excluded (l must avoid 1, 2, kt-1, kt)", "REJECT_PARAMS")
    n = 2 * kt + 1
    everything = list(range(1, n))
    bud = DifferenceBudget.for_classes(k, n, everything)
    classes: list[FactorClass] = []
    plan: list[str] = []
    table = _stored_2l(k, t, l)
    if table is not None:
        row_fw = sorted(d for inc in table.increments() for d in inc[:1])
        plan.append("stored rows")
    elif l:
        row_fw = _row_classes(n, l)
        table = rows_for_classes(k, n, row_fw, budget)
        plan.append(f"rows {row_fw}")
    if l:
        bud.consume("rows", row_fw)
        classes += develop_rows(table)
    if (k, t, l) == (17, 1, 14):
        requests = [four_Cn(4, 8), two_Cn(13)]
    else:
        requests = _cn_requests(n, sorted(bud.remaining.elements()))
    for req in requests:
        bud.consume(req.label, req.forward(n))
        classes += difference_factorization(k, n, req, budget)
        plan.append(req.label)
    if not bud.empty:
        raise Rejected(f"classes left over: {sorted(bud.remaining.elements())}", "REJECT_BUDGET")
    host = forward_host(k, n, everything)
    cert = Certificate.build(host, classes, {"construction": "construction_2l", "k": k, "t": t, "l": l,
                                             "blocks": plan})
    return require_valid(cert)


def _row_classes(n: int, l: int) -> list[int]:
    """Pick l +-pairs for the rows, non-coprime classes first (they are the awkward ones for C_n)."""
    pairs = sorted(range(1, (n - 1) // 2 + 1), key=lambda d: (gcd(d, n) == 1, d))[:l]
    return sorted([d for d in pairs] + [n - d for d in pairs])


def _cn_requests(n: int, remaining: Sequence[int]) -> list[DiffRequest]:
    reps = sorted({min(d, n - d) for d in remaining})
    coprime = [d for d in reps if gcd(d, n) == 1]
    other = [d for d in reps if gcd(d, n) != 1]
    reqs = []
    while other:
        d1 = other.pop(0)
        if other:
            d2 = other.pop(0)
        elif coprime:
            d2 = coprime.pop()
        else:
            raise NotFound(f"class +-{d1} cannot be covered by C_{n}-factors on its own")
        reqs.append(four_Cn(d1, d2))
    reqs += [two_Cn(d) for d in coprime]
    return reqs
