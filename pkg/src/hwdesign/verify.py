"""Exact certificate checking.

Every check here is exhaustive: edge multisets are compared exactly and each
class is tested against its kind's invariants over the host vertex set.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .errors import Rejected
from .model import (
    ALMOST,
    HALF,
    HOLEY,
    INF,
    MIXED,
    ONE_FACTOR,
    UNIFORM,
    Certificate,
    FactorClass,
    Vertex,
    materialize_edges,
    measured_profile,
)

MAX_WITNESSES = 10
VALID, INVALID = "VALID", "INVALID"


@dataclass
class VerifyReport:
    violations: list[tuple[str, object]] = field(default_factory=list)
    profile: dict[str, int] = field(default_factory=dict)
    truncated: int = 0

    @property
    def verdict(self) -> str:
        return INVALID if self.violations else VALID

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {c for c, _ in self.violations}

    def summary(self) -> str:
        lines = [self.verdict, "profile: " + _fmt_profile(self.profile)]
        for code, wit in self.violations:
            lines.append(f"  {code}: {_fmt_witness(wit)}")
        if self.truncated:
            lines.append(f"  ... {self.truncated} more")
        return "\n".join(lines)


def _fmt_profile(p: dict[str, int]) -> str:
    return ", ".join(f"{k}={v}" for k, v in p.items()) or "(empty)"


def _fmt_witness(w) -> str:
    if isinstance(w, Vertex):
        return str(w)
    if isinstance(w, tuple) and w and all(isinstance(x, Vertex) for x in w):
        return "{" + ", ".join(map(str, w)) + "}"
    if isinstance(w, tuple):
        return "(" + ", ".join(_fmt_witness(x) for x in w) + ")"
    return str(w)


class _Collector:
    """Gathers (sort key, code, witness) and keeps the first few in order."""

    def __init__(self):
        self.items: list[tuple[int, int, str, object]] = []
        self._seq = 0

    def add(self, class_index: int, code: str, witness) -> None:
        self.items.append((class_index, self._seq, code, witness))
        self._seq += 1

    def report(self, profile: dict[str, int]) -> VerifyReport:
        self.items.sort(key=lambda t: (t[0], t[1]))
        kept = [(c, w) for _, _, c, w in self.items[:MAX_WITNESSES]]
        return VerifyReport(kept, profile, max(0, len(self.items) - MAX_WITNESSES))


def _check_class(cls: FactorClass, idx: int, vertices: frozenset[Vertex], out: _Collector,
                 hole: frozenset[Vertex] | None = None) -> None:
    seen: Counter[Vertex] = Counter()
    for c in cls.cycles:
        if cls.kind == ONE_FACTOR:
            if len(c) != 2 or c[0] == c[1]:
                out.add(idx, "BAD_PAIR", (idx, c))
        else:
            if len(c) < 3:
                out.add(idx, "SHORT_CYCLE", (idx, c))
            if len(set(c)) != len(c):
                dup = next(v for v, k in Counter(c).items() if k > 1)
                out.add(idx, "REPEATED_VERTEX", (idx, dup))
            if cls.k is not None and cls.kind != MIXED and len(c) != cls.k:
                out.add(idx, "WRONG_LENGTH", (idx, len(c)))
        seen.update(set(c))
    for v, k in seen.items():
        if k > 1:
            out.add(idx, "VERTEX_OVERLAP", (idx, v))
        if v not in vertices:
            out.add(idx, "FOREIGN_VERTEX", (idx, v))
    covered = set(seen)
    order = len(vertices)
    kind = cls.kind
    if kind in (UNIFORM, MIXED, ONE_FACTOR):
        missing = sorted(vertices - covered)
        if missing:
            out.add(idx, "NOT_SPANNING", (idx, missing[0]))
        if kind == MIXED and len({len(c) for c in cls.cycles}) < 2:
            out.add(idx, "NOT_MIXED", idx)
    elif kind == ALMOST:
        if cls.missing is None:
            out.add(idx, "NO_MISSING_VERTEX", idx)
        else:
            if cls.missing in covered:
                out.add(idx, "MISSING_VERTEX_COVERED", (idx, cls.missing))
            rest = sorted(vertices - covered - {cls.missing})
            if rest:
                out.add(idx, "NOT_SPANNING", (idx, rest[0]))
        if cls.k and len(cls.cycles) * cls.k != order - 1:
            out.add(idx, "WRONG_CYCLE_COUNT", (idx, len(cls.cycles)))
    elif kind == HALF:
        if cls.k and len(cls.cycles) * 2 * cls.k != order - 1:
            out.add(idx, "WRONG_CYCLE_COUNT", (idx, len(cls.cycles)))
    elif kind == HOLEY:
        if hole is not None:
            touched = sorted(covered & hole)
            if touched:
                out.add(idx, "HOLE_TOUCHED", (idx, touched[0]))
            rest = sorted(vertices - hole - covered)
            if rest:
                out.add(idx, "NOT_SPANNING", (idx, rest[0]))


def _check_edges(classes: Sequence[FactorClass], host_edges: list, out: _Collector) -> None:
    want = Counter(host_edges)
    have: Counter = Counter()
    first_class: dict = {}
    for i, cls in enumerate(classes):
        for e in cls.edges():
            have[e] += 1
            if have[e] > want.get(e, 0):
                code = "FOREIGN_EDGE" if e not in want else "DOUBLE_COVERED_EDGE"
                out.add(i, code, e)
            first_class.setdefault(e, i)
    for e in sorted(want):
        if have[e] < want[e]:
            out.add(len(classes), "UNCOVERED_EDGE", e)


def _arcs_shape(cert: Certificate, order: int, out: _Collector) -> None:
    ap = [c for c in cert.classes if c.kind == ALMOST]
    half = [c for c in cert.classes if c.kind == HALF]
    if not ap and not half:
        return
    if len(ap) != (order - 1) // 2 or len(half) != 1 or len(ap) + len(half) != len(cert.classes):
        out.add(len(cert.classes), "ARCS_SHAPE", (len(ap), len(half)))


def check_certificate(cert: Certificate) -> VerifyReport:
    """Exact check of a whole certificate; always returns a report."""
    out = _Collector()
    try:
        host_edges = materialize_edges(cert.host)
        vertices = cert.host.vertex_set()
    except Rejected as exc:
        out.add(-1, exc.code, str(exc))
        return out.report(measured_profile(cert.classes))
    for i, cls in enumerate(cert.classes):
        if cls.kind == HOLEY:
            # holes are only known to the frame checker; here just the basics
            _check_class(cls, i, vertices, out, hole=None)
        else:
            _check_class(cls, i, vertices, out)
    _check_edges(cert.classes, host_edges, out)
    _arcs_shape(cert, len(vertices), out)
    profile = measured_profile(cert.classes)
    if profile != cert.profile:
        out.add(len(cert.classes), "PROFILE_MISMATCH", (_fmt_profile(cert.profile), _fmt_profile(profile)))
    return out.report(profile)


def check_frame(cert: Certificate, parts: Iterable[Iterable[Vertex]], k: int) -> VerifyReport:
    """A (k,1)-cycle frame: holey C_k-factors, each part missed by |part|/2 classes."""
    parts = [frozenset(p) for p in parts]
    sizes = {len(p) for p in parts}
    if len(sizes) != 1:
        raise Rejected(f"part sizes differ: {sorted(sizes)}", "REJECT_PARTS")
    g = sizes.pop()
    out = _Collector()
    vertices = frozenset().union(*parts)
    host_edges = materialize_edges(cert.host)
    if cert.host.vertex_set() != vertices:
        out.add(-1, "PARTS_MISMATCH", "parts do not match host vertices")
    missed = Counter()
    for i, cls in enumerate(cert.classes):
        if cls.kind != HOLEY or cls.k != k:
            out.add(i, "WRONG_KIND", (i, cls.kind))
        covered = set(cls.vertices())
        holes = [j for j, p in enumerate(parts) if not (covered & p)]
        if len(holes) != 1:
            # either every part is touched, or the class misses several parts
            touched = [j for j, p in enumerate(parts) if covered & p and not p <= covered]
            hole_j = touched[0] if touched else (holes[0] if holes else 0)
            partial = sorted(covered & parts[hole_j])
            if partial and not parts[hole_j] <= covered:
                out.add(i, "HOLE_TOUCHED", (i, partial[0]))
            else:
                out.add(i, "NO_SINGLE_HOLE", (i, len(holes)))
            _check_class(cls, i, vertices, out, hole=parts[hole_j])
            continue
        missed[holes[0]] += 1
        _check_class(cls, i, vertices, out, hole=parts[holes[0]])
    for j, p in enumerate(parts):
        if missed[j] != g // 2:
            out.add(len(cert.classes), "HOLE_COUNT", (min(p), missed[j]))
    _check_edges(cert.classes, host_edges, out)
    return out.report(measured_profile(cert.classes))


# ---------------------------------------------------------------------------
# difference lists


@dataclass(frozen=True)
class DifferenceList:
    pair: tuple[int, int]
    modulus: int
    diffs: tuple[int, ...]

    def counter(self) -> Counter[int]:
        return Counter(self.diffs)


def difference_list(cls: FactorClass, pair: tuple[int, int], u: int) -> DifferenceList:
    """Multiset of x - y over ordered adjacent pairs ((x, j), (y, j')); edges at inf are skipped."""
    j, jp = pair
    diffs = []
    for a, b in cls.edges():
        if not (a.is_residue and b.is_residue):
            continue
        for p, q in ((a, b), (b, a)):
            if p.coords[1] == j and q.coords[1] == jp:
                diffs.append((p.coords[0] - q.coords[0]) % u)
    return DifferenceList(pair, u, tuple(sorted(diffs)))


def check_lemma_conditions(cls: FactorClass, variant: str, k: int, d: int | None = None) -> VerifyReport:
    """Check a base class against the development conditions.

    Variant A: two k-cycles over Z_k x Z_2 plus inf, step d with gcd(d, k) = 1.
    Variant B: six k-cycles over Z_3k x Z_2 plus inf, step d = 3.
    Differences are compared as exact multisets (each listed difference once).
    """
    if variant == "A":
        u, count = k, 2
    elif variant == "B":
        u, count, d = 3 * k, 6, 3 if d is None else d
    else:
        raise Rejected(f"unknown variant {variant!r}", "REJECT_SHAPE")
    if len(cls.cycles) != count or any(len(c) != k for c in cls.cycles):
        raise Rejected(
            f"variant {variant} wants {count} cycles of length {k}, got {[len(c) for c in cls.cycles]}",
            "REJECT_SHAPE",
        )
    out = _Collector()
    everything = {INF} | {Vertex(2, "", (x, j), (u, 2)) for x in range(u) for j in range(2)}
    seen = Counter(cls.vertices())
    for v, c in seen.items():
        if c > 1:
            out.add(0, "VERTEX_OVERLAP", v)
        if v not in everything:
            out.add(0, "FOREIGN_VERTEX", v)
    missing = sorted(everything - set(seen))
    if len(missing) != 1 or missing[0] == INF:
        out.add(0, "NOT_ALMOST_SPANNING", tuple(missing[:3]))
    levels = []
    for c in cls.cycles:
        for i, v in enumerate(c):
            if v == INF:
                levels += [c[i - 1].coords[1], c[(i + 1) % len(c)].coords[1]]
    if sorted(levels) != [0, 1]:
        out.add(0, "INFINITY_LEVELS", tuple(levels))
    if variant == "A" and (d is None or gcd(d, k) != 1):
        out.add(0, "STEP_NOT_COPRIME", d)
    nonzero = Counter(range(1, u))
    full = Counter(range(u))
    d11 = Counter(x for x in range(1, u) if x not in (d % u, (-d) % u))
    for pair, want in (((0, 0), nonzero), ((0, 1), full), ((1, 1), d11)):
        got = difference_list(cls, pair, u).counter()
        if got != want:
            extra = sorted((got - want).elements())
            lack = sorted((want - got).elements())
            out.add(0, "DIFFERENCES", (pair, "extra", tuple(extra[:5]), "missing", tuple(lack[:5])))
    return out.report(measured_profile([cls]))


def check_alignment(cert: Certificate) -> bool:
    """Missed vertices of the almost parallel classes are distinct and form the half class."""
    missed = [c.missing for c in cert.classes if c.kind == ALMOST]
    half = [c for c in cert.classes if c.kind == HALF]
    if len(half) != 1 or None in missed or len(set(missed)) != len(missed):
        return False
    return set(missed) == set(half[0].vertices())


def require_valid(cert: Certificate) -> Certificate:
    """Gate used by the builders: raise if ``cert`` does not verify."""
    rep = check_certificate(cert)
    if not rep.ok:
        raise Rejected("construction failed verification:\n" + rep.summary(), "INVALID")
    return cert
