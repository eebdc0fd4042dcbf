"""Vertices, cycles, factor classes, host graphs and certificates.

Everything here is immutable. Vertices are small named tuples so they hash and
sort quickly; the total order is ``inf < labels < residues``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import lcm
from typing import Iterable, NamedTuple, Sequence

from .errors import Rejected

INF_TAG, LABEL_TAG, RESIDUE_TAG = 0, 1, 2


class Vertex(NamedTuple):
    tag: int
    name: str
    coords: tuple[int, ...]
    moduli: tuple[int, ...]

    @property
    def is_residue(self) -> bool:
        return self.tag == RESIDUE_TAG

    def __str__(self) -> str:
        if self.tag == INF_TAG:
            return "inf"
        if self.tag == LABEL_TAG:
            return f'"{self.name}"'
        return "(" + ",".join(map(str, self.coords)) + ")"

    def shift(self, step: Sequence[int]) -> Vertex:
        if self.tag != RESIDUE_TAG:
            return self
        if len(step) != len(self.coords):
            raise Rejected(f"step {tuple(step)} does not match {self}", "REJECT_MODULI")
        return Vertex(
            RESIDUE_TAG,
            "",
            tuple((c + s) % q for c, s, q in zip(self.coords, step, self.moduli)),
            self.moduli,
        )


INF = Vertex(INF_TAG, "inf", (), ())


def label(name: str) -> Vertex:
    return Vertex(LABEL_TAG, name, (), ())


def res(coords: Sequence[int] | int, moduli: Sequence[int] | int) -> Vertex:
    """Residue vertex; negative printed coordinates are reduced here."""
    if isinstance(coords, int):
        coords = (coords,)
    if isinstance(moduli, int):
        moduli = (moduli,)
    if len(coords) != len(moduli):
        raise Rejected(f"coordinates {coords} vs moduli {moduli}", "REJECT_MODULI")
    return Vertex(RESIDUE_TAG, "", tuple(c % q for c, q in zip(coords, moduli)), tuple(moduli))


def group_elements(moduli: Sequence[int]) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = [()]
    for q in moduli:
        out = [e + (c,) for e in out for c in range(q)]
    return out


Edge = tuple[Vertex, Vertex]


def edge(a: Vertex, b: Vertex) -> Edge:
    return (a, b) if a <= b else (b, a)


def canonical_cycle(seq: Iterable[Vertex]) -> tuple[Vertex, ...]:
    """Rotate so the minimum is first, then orient so the second entry is smaller than the last."""
    cyc = tuple(seq)
    if len(cyc) < 3:
        return cyc
    i = cyc.index(min(cyc))
    rot = cyc[i:] + cyc[:i]
    if rot[1] > rot[-1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


def cycle_edges(cyc: Sequence[Vertex]) -> list[Edge]:
    n = len(cyc)
    return [edge(cyc[i], cyc[(i + 1) % n]) for i in range(n)]


# ---------------------------------------------------------------------------
# factor classes

UNIFORM = "uniform"
MIXED = "mixed"
ALMOST = "almost_parallel"
HALF = "half_parallel"
ONE_FACTOR = "one_factor"
HOLEY = "holey"
KINDS = (UNIFORM, MIXED, ALMOST, HALF, ONE_FACTOR, HOLEY)


@dataclass(frozen=True)
class FactorClass:
    """A typed class of cycles (or of vertex pairs for ``one_factor``).

    ``k`` is the common cycle length for the uniform, almost/half parallel and
    holey kinds; ``missing`` is the uncovered vertex of an almost parallel class.
    """

    kind: str
    cycles: tuple[tuple[Vertex, ...], ...]
    k: int | None = None
    missing: Vertex | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise Rejected(f"unknown class kind {self.kind!r}", "REJECT_KIND")
        if self.kind == ONE_FACTOR:
            canon = tuple(sorted(edge(*p) for p in self.cycles))
        else:
            canon = tuple(sorted(canonical_cycle(c) for c in self.cycles))
        object.__setattr__(self, "cycles", canon)

    @classmethod
    def of(cls, kind: str, cycles: Iterable[Sequence[Vertex]], k: int | None = None,
           missing: Vertex | None = None) -> FactorClass:
        return cls(kind, tuple(tuple(c) for c in cycles), k, missing)

    def edges(self) -> list[Edge]:
        if self.kind == ONE_FACTOR:
            return list(self.cycles)
        out: list[Edge] = []
        for c in self.cycles:
            out.extend(cycle_edges(c))
        return out

    def vertices(self) -> list[Vertex]:
        return [v for c in self.cycles for v in c]

    def profile_key(self) -> str:
        return profile_key(self.kind, self.k)

    def translate(self, step: Sequence[int]) -> FactorClass:
        return FactorClass(
            self.kind,
            tuple(tuple(v.shift(step) for v in c) for c in self.cycles),
            self.k,
            self.missing.shift(step) if self.missing is not None else None,
        )

    def relabel(self, mapping: dict[Vertex, Vertex], missing: Vertex | None = None) -> FactorClass:
        new_missing = missing
        if new_missing is None and self.missing is not None:
            new_missing = mapping[self.missing]
        return FactorClass(
            self.kind, tuple(tuple(mapping[v] for v in c) for c in self.cycles), self.k, new_missing
        )


def profile_key(kind: str, k: int | None = None) -> str:
    return {
        UNIFORM: f"C{k}",
        MIXED: "mixed",
        ALMOST: f"AP{k}",
        HALF: f"half{k}",
        ONE_FACTOR: "1F",
        HOLEY: f"holey{k}",
    }[kind]


def measured_profile(classes: Iterable[FactorClass]) -> dict[str, int]:
    return dict(sorted(Counter(c.profile_key() for c in classes).items()))


def uniform(cycles: Iterable[Sequence[Vertex]]) -> FactorClass:
    """A C_k-factor; ``k`` read off the first cycle."""
    cycles = [tuple(c) for c in cycles]
    return FactorClass.of(UNIFORM, cycles, len(cycles[0]))


def two_factor(cycles: Iterable[Sequence[Vertex]]) -> FactorClass:
    """Uniform if all cycle lengths agree, mixed otherwise."""
    cycles = [tuple(c) for c in cycles]
    lengths = {len(c) for c in cycles}
    if len(lengths) == 1:
        return FactorClass.of(UNIFORM, cycles, lengths.pop())
    return FactorClass.of(MIXED, cycles)


# ---------------------------------------------------------------------------
# host graphs


@dataclass(frozen=True)
class HostGraph:
    """Symbolic host graph.

    ``complete`` and ``complete_minus_1f`` carry an explicit vertex list,
    ``multipartite`` its parts, ``lex_cycle`` the pair (m, n) with vertex
    (x, i) in position x of the cycle, ``cayley`` the moduli and connection
    multiset.
    """

    kind: str
    vertices: tuple[Vertex, ...] = ()
    one_factor: tuple[Edge, ...] = ()
    parts: tuple[tuple[Vertex, ...], ...] = ()
    m: int = 0
    n: int = 0
    moduli: tuple[int, ...] = ()
    connection: tuple[tuple[int, ...], ...] = ()

    @classmethod
    def complete(cls, vertices: Iterable[Vertex]) -> HostGraph:
        return cls("complete", vertices=tuple(sorted(vertices)))

    @classmethod
    def complete_minus_1f(cls, vertices: Iterable[Vertex], pairs: Iterable[Sequence[Vertex]]) -> HostGraph:
        return cls(
            "complete_minus_1f",
            vertices=tuple(sorted(vertices)),
            one_factor=tuple(sorted(edge(*p) for p in pairs)),
        )

    @classmethod
    def multipartite(cls, parts: Iterable[Iterable[Vertex]]) -> HostGraph:
        ps = tuple(sorted(tuple(sorted(p)) for p in parts))
        seen: set[Vertex] = set()
        for p in ps:
            if seen.intersection(p):
                raise Rejected("multipartite parts overlap", "REJECT_HOST")
            seen.update(p)
        return cls("multipartite", parts=ps)

    @classmethod
    def lex_cycle(cls, m: int, n: int) -> HostGraph:
        if m < 3 or n < 1:
            raise Rejected(f"C_{m}[{n}] needs m >= 3, n >= 1", "REJECT_HOST")
        return cls("lex_cycle", m=m, n=n, moduli=(m, n))

    @classmethod
    def cayley(cls, moduli: Sequence[int], connection: Iterable[Sequence[int]]) -> HostGraph:
        moduli = tuple(moduli)
        conn = tuple(sorted(tuple(c % q for c, q in zip(s, moduli)) for s in connection))
        host = cls("cayley", moduli=moduli, connection=conn)
        host._check_connection()
        return host

    def _check_connection(self) -> None:
        zero = tuple(0 for _ in self.moduli)
        counts = Counter(self.connection)
        for s, c in counts.items():
            if s == zero:
                raise Rejected("connection set contains the identity", "REJECT_HOST")
            neg = tuple((-a) % q for a, q in zip(s, self.moduli))
            if counts[neg] != c:
                raise Rejected(f"connection set not closed under negation at {s}", "REJECT_HOST")

    def vertex_set(self) -> frozenset[Vertex]:
        if self.kind in ("complete", "complete_minus_1f"):
            return frozenset(self.vertices)
        if self.kind == "multipartite":
            return frozenset(v for p in self.parts for v in p)
        return frozenset(res(g, self.moduli) for g in group_elements(self.moduli))

    def order(self) -> int:
        return len(self.vertex_set())

    def describe(self) -> str:
        if self.kind == "complete":
            return f"K_{len(self.vertices)}"
        if self.kind == "complete_minus_1f":
            return f"K_{len(self.vertices)}-I"
        if self.kind == "multipartite":
            sizes = Counter(len(p) for p in self.parts)
            return "K(" + ",".join(f"{g}^{u}" for g, u in sorted(sizes.items())) + ")"
        if self.kind == "lex_cycle":
            return f"C_{self.m}[{self.n}]"
        return f"Cay(Z_{'xZ_'.join(map(str, self.moduli))}, |S|={len(self.connection)})"


def materialize_edges(host: HostGraph) -> list[Edge]:
    """Exact edge multiset of ``host`` as a sorted list (repeats = multiplicity)."""
    if host.kind == "complete":
        return sorted(edge(a, b) for a, b in combinations(host.vertices, 2))
    if host.kind == "complete_minus_1f":
        removed = Counter(host.one_factor)
        out = []
        for a, b in combinations(host.vertices, 2):
            e = edge(a, b)
            if removed[e]:
                removed[e] -= 1
            else:
                out.append(e)
        if +removed:
            raise Rejected("removed 1-factor is not inside the vertex set", "REJECT_HOST")
        return sorted(out)
    if host.kind == "multipartite":
        out = []
        for p, q in combinations(host.parts, 2):
            out.extend(edge(a, b) for a in p for b in q)
        return sorted(out)
    if host.kind == "lex_cycle":
        m, n = host.m, host.n
        out = []
        for x in range(m):
            for i in range(n):
                for j in range(n):
                    out.append(edge(res((x, i), (m, n)), res((x + 1, j), (m, n))))
        return sorted(out)
    if host.kind == "cayley":
        host._check_connection()
        directed: Counter[Edge] = Counter()
        for g in group_elements(host.moduli):
            a = res(g, host.moduli)
            for s in host.connection:
                directed[edge(a, a.shift(s))] += 1
        out = []
        for e, c in directed.items():
            out.extend([e] * (c // 2))
        return sorted(out)
    raise Rejected(f"unknown host kind {host.kind!r}", "REJECT_HOST")


def lex_cycle_as_cayley(m: int, n: int) -> HostGraph:
    """C_m[n] is Cay(Z_m x Z_n, {+-1} x Z_n) for m >= 3."""
    return HostGraph.cayley((m, n), [(e, d) for e in (1, -1) for d in range(n)])


# ---------------------------------------------------------------------------
# development


@dataclass(frozen=True)
class DevelopmentRule:
    """Translate by ``step`` repeatedly; zero entries are the fixed coordinates."""

    step: tuple[int, ...]
    moduli: tuple[int, ...]
    orbit_length: int

    def __post_init__(self):
        if self.orbit_length < 1:
            raise Rejected("orbit length must be positive", "REJECT_RULE")
        for s, q in zip(self.step, self.moduli):
            if (self.orbit_length * s) % q:
                raise Rejected(f"orbit length {self.orbit_length} does not close step {self.step}", "REJECT_RULE")

    @classmethod
    def full(cls, step: Sequence[int], moduli: Sequence[int]) -> DevelopmentRule:
        """Rule whose orbit length is the order of ``step``."""
        order = 1
        for s, q in zip(step, moduli):
            if s % q:
                order = lcm(order, q // _gcd(s % q, q))
        return cls(tuple(step), tuple(moduli), order)

    @property
    def action(self) -> tuple[str, ...]:
        return tuple("translate" if s % q else "fix" for s, q in zip(self.step, self.moduli))

    def multiple(self, i: int) -> tuple[int, ...]:
        return tuple((i * s) % q for s, q in zip(self.step, self.moduli))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _check_rule_moduli(classes_vertices: Iterable[Vertex], rule: DevelopmentRule) -> None:
    for v in classes_vertices:
        if v.tag == RESIDUE_TAG and v.moduli != rule.moduli:
            raise Rejected(f"vertex {v} has moduli {v.moduli}, rule expects {rule.moduli}", "REJECT_MODULI")


def develop(base: FactorClass, rule: DevelopmentRule) -> list[FactorClass]:
    """The orbit of ``base``: class i is ``base`` translated by i*step."""
    _check_rule_moduli(base.vertices(), rule)
    return [base.translate(rule.multiple(i)) for i in range(rule.orbit_length)]


def orbit_cycles(cycles: Iterable[Sequence[Vertex]], rule: DevelopmentRule) -> list[tuple[Vertex, ...]]:
    """All translates of the given cycles, pooled (used when one orbit forms a single factor)."""
    cycles = [tuple(c) for c in cycles]
    _check_rule_moduli((v for c in cycles for v in c), rule)
    out = []
    for i in range(rule.orbit_length):
        step = rule.multiple(i)
        out.extend(tuple(v.shift(step) for v in c) for c in cycles)
    return out


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class Certificate:
    host: HostGraph
    classes: tuple[FactorClass, ...]
    profile: dict[str, int] = field(default_factory=dict, hash=False)
    provenance: dict = field(default_factory=dict, hash=False, compare=False)

    @classmethod
    def build(cls, host: HostGraph, classes: Iterable[FactorClass], provenance: dict | None = None,
              profile: dict[str, int] | None = None) -> Certificate:
        classes = tuple(classes)
        claimed = dict(profile) if profile is not None else measured_profile(classes)
        # json round trip keeps provenance plain (lists, str keys) so files reproduce it exactly
        prov = json.loads(json.dumps(provenance or {}))
        return cls(host, classes, dict(sorted(claimed.items())), prov)

    def count(self, key: str) -> int:
        return sum(1 for c in self.classes if c.profile_key() == key)

    def hw_counts(self, m: int, n: int) -> tuple[int, int]:
        return self.count(f"C{m}"), self.count(f"C{n}")

    def with_provenance(self, **extra) -> Certificate:
        prov = dict(self.provenance)
        prov.update(json.loads(json.dumps(extra)))
        return Certificate(self.host, self.classes, self.profile, prov)
