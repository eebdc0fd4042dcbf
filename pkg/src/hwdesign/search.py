"""Bounded backtracking for small ingredients that are only known to exist.

Every search develops a small base object under a translation group (the
same device the explicit constructions use) and hands back a certificate
that has already passed the verifier. Results are cached as certificate
files keyed by the task, in ``$DESIGN_FIXTURE_DIR`` when set and in the
package's ``data/cache`` directory otherwise.
"""

from __future__ import annotations

import logging
import os
import random
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import NecessaryFail, NotFound, Rejected
from .model import (
    ALMOST,
    HALF,
    HOLEY,
    INF,
    UNIFORM,
    Certificate,
    FactorClass,
    HostGraph,
    Vertex,
    edge,
    materialize_edges,
    res,
)
from .verify import check_certificate, check_frame, check_lemma_conditions

log = logging.getLogger(__name__)

PACKAGE_CACHE = Path(__file__).parent / "data" / "cache"
DEFAULT_NODES = 10**7
DEFAULT_SECONDS = 60.0


@dataclass(frozen=True)
class Budget:
    nodes: int = DEFAULT_NODES
    seconds: float = DEFAULT_SECONDS


def _budget(budget: Budget | int | None) -> Budget:
    if budget is None:
        return Budget()
    if isinstance(budget, int):
        return Budget(nodes=budget)
    return budget


class _Meter:
    """Counts nodes against a budget; raises _Exhausted when either limit is hit."""

    def __init__(self, budget: Budget):
        self.budget = budget
        self.nodes = 0
        self.deadline = time.monotonic() + budget.seconds

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.nodes:
            raise _Exhausted
        if self.nodes & 0x3FF == 0 and time.monotonic() > self.deadline:
            raise _Exhausted


class _Exhausted(Exception):
    pass


# ---------------------------------------------------------------------------
# cache


def cache_dirs() -> list[Path]:
    dirs = []
    env = os.environ.get("DESIGN_FIXTURE_DIR")
    if env:
        dirs.append(Path(env))
    dirs.append(PACKAGE_CACHE)
    return dirs


def task_key(kind: str, **params) -> str:
    parts = [kind] + [f"{k}={_fmt(v)}" for k, v in sorted(params.items())]
    return "__".join(parts)


def _fmt(v) -> str:
    if isinstance(v, (list, tuple)):
        return ",".join(_fmt(x) for x in v)
    return str(v)


def load_cached(kind: str, **params) -> Certificate | None:
    from .certfile import read

    name = task_key(kind, **params) + ".cert"
    for d in cache_dirs():
        path = d / name
        if path.is_file():
            cert = read(path)
            if check_certificate(cert).ok:
                return cert
            log.warning("ignoring cached %s: it does not verify", path)
    return None


def store_cached(cert: Certificate, kind: str, **params) -> Path | None:
    from .certfile import write

    target = cache_dirs()[0]
    try:
        target.mkdir(parents=True, exist_ok=True)
        path = target / (task_key(kind, **params) + ".cert")
        write(cert, path)
        return path
    except OSError as exc:  # read-only install: searching again next time is acceptable
        log.warning("could not cache %s: %s", kind, exc)
        return None


def _released(cert: Certificate) -> Certificate:
    rep = check_certificate(cert)
    if not rep.ok:
        raise Rejected("search produced an invalid design:\n" + rep.summary(), "INVALID")
    return cert


# ---------------------------------------------------------------------------
# base rows: C_m-factors of Cay(Z_m x Z_n, ...) developed by (0, +1)


def search_base_rows(m: int, n: int, classes: Sequence[int], rows: int,
                     budget: Budget | int | None = None, seed: int = 0) -> list[list[int]]:
    """Rows of forward differences; at every position the rows use ``classes`` exactly.

    Row r is the cycle ((0,0),(1,b_1),...,(m-1,b_{m-1})) with b the prefix sums,
    so each row's differences must add up to 0 mod n. Returns the difference rows.
    """
    values = sorted(c % n for c in classes)
    if rows != len(values):
        raise NotFound(f"{rows} rows cannot use {len(values)} classes at each position")
    if m < 3:
        raise Rejected("rows need m >= 3", "REJECT_PARAMS")
    meter = _Meter(_budget(budget))
    rng = random.Random(seed)
    try:
        while True:
            meter.tick()
            table = [[] for _ in range(rows)]
            for _ in range(m - 2):
                perm = values[:]
                rng.shuffle(perm)
                for r in range(rows):
                    table[r].append(perm[r])
            found = _close_rows(table, values, n, meter, rng)
            if found is not None:
                return found
    except _Exhausted:
        raise NotFound(f"no base rows for m={m}, n={n}, classes={values} within budget") from None


def _close_rows(table, values, n, meter, rng):
    """Choose the last two columns so every column is a permutation of ``values``."""
    need = [(-sum(row)) % n for row in table]
    pool_a = {}
    for v in values:
        pool_a[v] = pool_a.get(v, 0) + 1
    pool_b = dict(pool_a)
    order = list(range(len(table)))
    rng.shuffle(order)
    pick: dict[int, int] = {}

    def place(i: int) -> bool:
        meter.tick()
        if i == len(order):
            return True
        r = order[i]
        cands = [v for v, c in pool_a.items() if c]
        rng.shuffle(cands)
        for a in cands:
            b = (need[r] - a) % n
            if pool_b.get(b, 0) == 0:
                continue
            pool_a[a] -= 1
            pool_b[b] -= 1
            pick[r] = a
            if place(i + 1):
                return True
            pool_a[a] += 1
            pool_b[b] += 1
        return False

    if not place(0):
        return None
    return [row + [pick[r], (need[r] - pick[r]) % n] for r, row in enumerate(table)]


# ---------------------------------------------------------------------------
# column-transversal cycles: C_n-factors invariant under (1, 0)


def search_transversal(m: int, n: int, forward: Sequence[int], count: int,
                       budget: Budget | int | None = None, seed: int = 0) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Base n-cycles through every y in Z_n once, x moving by +-1 each step.

    Each base cycle (y_0..y_{n-1}) with steps eps_j yields, under translation by
    (1,0), a C_n-factor of Cay(Z_m x Z_n, ...). An edge stepping +1 from y to y'
    consumes the forward slot (y, y'-y), a -1 step from y to y' the slot (y', y-y').
    Together the base cycles must use each slot (y, d), d in ``forward``, once.
    """
    fw = sorted({d % n for d in forward})
    if len(fw) != len(list(forward)) or 0 in fw:
        raise Rejected("forward differences must be distinct and nonzero", "REJECT_PARAMS")
    if count != len(fw):
        raise NotFound(f"{count} base cycles cannot use {len(fw)} differences")
    meter = _Meter(_budget(budget))
    attempt = 0
    while True:
        rng = random.Random(seed * 7919 + attempt)
        attempt += 1
        try:
            sub = _Meter(Budget(min(20_000, meter.budget.nodes), meter.budget.seconds))
            result = _transversal_once(m, n, fw, count, rng, sub)
            meter.nodes += sub.nodes
            if result is not None:
                return result
        except _Exhausted:
            meter.nodes += sub.nodes
        if meter.nodes > meter.budget.nodes or time.monotonic() > meter.deadline:
            raise NotFound(f"no transversal cycles for m={m}, n={n}, D={fw} within budget")


def _transversal_once(m, n, fw, count, rng, meter):
    used: set[tuple[int, int]] = set()
    cycles: list = []

    def extend(seq: list[int], signs: list[int], visited: set[int]) -> bool:
        meter.tick()
        y = seq[-1]
        opts = []
        for d in fw:
            opts.append(((y + d) % n, 1, (y, d)))
            z = (y - d) % n
            opts.append((z, -1, (z, d)))
        rng.shuffle(opts)
        s0 = sum(signs)
        for z, e, slot in opts:
            if slot in used:
                continue
            s = s0 + e
            if len(seq) == n:
                if z != seq[0] or s % m:
                    continue
                used.add(slot)
                cycles.append((tuple(seq), tuple(signs + [e])))
                if nxt():
                    return True
                cycles.pop()
                used.discard(slot)
            else:
                if z in visited:
                    continue
                rem = n - len(seq)
                if not any((s + c) % m == 0 for c in range(-rem, rem + 1, 2)):
                    continue
                used.add(slot)
                visited.add(z)
                seq.append(z)
                signs.append(e)
                if extend(seq, signs, visited):
                    return True
                used.discard(slot)
                visited.discard(z)
                seq.pop()
                signs.pop()
        return False

    def nxt() -> bool:
        if len(cycles) == count:
            return True
        return extend([0], [], {0})

    return cycles if nxt() else None


def transversal_factors(m: int, n: int, bases) -> list[FactorClass]:
    out = []
    for ys, signs in bases:
        xs = [0]
        for e in signs[:-1]:
            xs.append(xs[-1] + e)
        base = [res((x, y), (m, n)) for x, y in zip(xs, ys)]
        cycles = [[v.shift((s, 0)) for v in base] for s in range(m)]
        out.append(FactorClass.of(UNIFORM, cycles, n))
    return out


# ---------------------------------------------------------------------------
# orbit factors: one factor whose translates under a cyclic subgroup give the rest


def search_orbit_factor(m: int, n: int, length: int, diffs: Sequence[int], step: tuple[int, int],
                        order: int, budget: Budget | int | None = None, seed: int = 0,
                        restart_nodes: int = 200_000) -> list[tuple[Vertex, ...]]:
    """A C_length-factor F of Cay(Z_m x Z_n, {+-1} x diffs) meeting each edge orbit of <step> once.

    F, F+step, ..., F+(order-1)step then partition the Cayley graph.
    Randomized restarts of a forward-checking cycle-by-cycle search.
    """
    diffs = sorted({d % n for d in diffs} | {(-d) % n for d in diffs})
    N = m * n
    vid = lambda x, y: (x % m) * n + (y % n)

    def orbit_key(x, y, d):
        best = None
        for i in range(order):
            cand = ((x + i * step[0]) % m, (y + i * step[1]) % n, d % n)
            if best is None or cand < best:
                best = cand
        return best

    keys: dict = {}
    nbrs: list[list[tuple[int, int, int, int]]] = []  # (w, key, dx, dy)
    for x in range(m):
        for y in range(n):
            row = []
            for e in (1, -1):
                for d in diffs:
                    w = vid(x + e, y + d)
                    k = orbit_key(x, y, d) if e == 1 else orbit_key(x - 1, y + d, -d)
                    kid = keys.setdefault(k, len(keys))
                    dy = d if d <= n // 2 else d - n
                    row.append((w, kid, e, dy))
            nbrs.append(row)
    if len(keys) * length != N * length or len(keys) != N:
        raise Rejected(f"orbit structure does not fit: {len(keys)} edge orbits for {N} vertices", "REJECT_PARAMS")
    maxd = max(abs(d if d <= n // 2 else d - n) for d in diffs)
    meter = _Meter(_budget(budget))
    attempt = 0
    while True:
        rng = random.Random(seed * 1_000_003 + attempt)
        attempt += 1
        sub = _Meter(Budget(restart_nodes, meter.budget.seconds))
        try:
            cycles = _orbit_once(m, n, N, length, nbrs, len(keys), maxd, rng, sub)
        except _Exhausted:
            cycles = None
        meter.nodes += sub.nodes
        if cycles is not None:
            return [tuple(res((v // n, v % n), (m, n)) for v in c) for c in cycles]
        if meter.nodes > meter.budget.nodes or time.monotonic() > meter.deadline:
            raise NotFound(f"no orbit factor for m={m}, n={n}, diffs={diffs} within budget")


def _orbit_once(m, n, N, L, nbrs, nkeys, maxd, rng, meter):
    order_of = [list(range(len(r))) for r in nbrs]
    for o in order_of:
        rng.shuffle(o)
    used = [False] * nkeys
    unc = [True] * N
    onp = [False] * N
    cycles: list[list[int]] = []

    def avail2(v, e0, e1):
        c = 0
        for w, k, _, _ in nbrs[v]:
            if used[k]:
                continue
            if (unc[w] and not onp[w]) or w == e0 or w == e1:
                c += 1
                if c >= 2:
                    return True
        return False

    def feasible(dx, dy, rem):
        if not any((dx + c) % m == 0 for c in range(-rem, rem + 1, 2)):
            return False
        if rem * maxd >= n:
            return True
        return any((dy + c) % n == 0 for c in range(-rem * maxd, rem * maxd + 1))

    def extend(path, dx, dy):
        meter.tick()
        u = path[-1]
        rem = L - len(path) + 1
        row = nbrs[u]
        for i in order_of[u]:
            w, k, ex, ey = row[i]
            if used[k]:
                continue
            if rem == 1:
                if w != path[0]:
                    continue
                used[k] = True
                cycles.append(list(path))
                for v in path:
                    unc[v] = False
                    onp[v] = False
                if nxt():
                    return True
                for v in path:
                    unc[v] = True
                    onp[v] = True
                cycles.pop()
                used[k] = False
                continue
            if not unc[w] or onp[w]:
                continue
            if not feasible(dx + ex, dy + ey, rem - 1):
                continue
            used[k] = True
            path.append(w)
            onp[w] = True
            e0, e1 = path[0], w
            ok = all(avail2(v, e0, e1) for v in range(N) if unc[v] and not onp[v])
            if ok and extend(path, dx + ex, dy + ey):
                return True
            used[k] = False
            path.pop()
            onp[w] = False
        return False

    def nxt():
        best, bc = -1, 1 << 30
        for v in range(N):
            if unc[v]:
                c = sum(1 for w, k, _, _ in nbrs[v] if unc[w] and not used[k])
                if c < bc:
                    best, bc = v, c
        if best < 0:
            return True
        onp[best] = True
        if extend([best], 0, 0):
            return True
        onp[best] = False
        return False

    return cycles if nxt() else None


# ---------------------------------------------------------------------------
# cycle frames


def frame_conditions(k: int, g: int, u: int) -> None:
    """Raise NecessaryFail unless a (k,1)-CF(g^u) can exist."""
    if g % 2:
        raise NecessaryFail(f"(k,1)-CF({g}^{u}) needs g even", "Theorem 2.7")
    if (g * (u - 1)) % k:
        raise NecessaryFail(f"(k,1)-CF({g}^{u}) needs g(u-1) = 0 mod k", "Theorem 2.7")
    if k % 2 and u < 4:
        raise NecessaryFail(f"odd k needs u >= 4, got u={u}", "Theorem 2.7")
    if k % 2 == 0 and u < 3:
        raise NecessaryFail(f"even k needs u >= 3, got u={u}", "Theorem 2.7")
    if (k, g, u) == (6, 6, 3):
        raise NecessaryFail("(6,1)-CF(6^3) does not exist", "Theorem 2.7 exception")


def frame_parts_cyclic(g: int, u: int) -> list[list[Vertex]]:
    return [[res(x, g * u) for x in range(i, g * u, u)] for i in range(u)]


def search_frame(k: int, g: int, u: int, budget: Budget | int | None = None, seed: int = 0,
                 use_cache: bool = True) -> Certificate:
    """(k,1)-CF(g^u) on Z_gu with parts the residue classes mod u.

    A base set B of k-cycles takes one point from each pair {x, x+gu/2} with
    x outside part 0 and uses every difference +-d (d not 0 mod u) once.
    B together with B+gu/2 is a holey factor missing part 0; its translates by
    0..gu/2-1 form the frame.
    """
    frame_conditions(k, g, u)
    if use_cache:
        cached = load_cached("frame", k=k, g=g, u=u)
        if cached is not None:
            return cached
    N = g * u
    half = N // 2
    if (g * (u - 1) // 2) % k:
        raise NotFound(f"cyclic frame search needs k | g(u-1)/2 for k={k}, g={g}, u={u}")
    ncyc = g * (u - 1) // (2 * k)
    classes_needed = {min(d, N - d) for d in range(1, N) if d % u}
    meter = _Meter(_budget(budget))
    attempt = 0
    base = None
    while base is None:
        rng = random.Random(seed * 104_729 + attempt)
        attempt += 1
        sub = _Meter(Budget(50_000, meter.budget.seconds))
        try:
            base = _frame_base_once(k, N, half, u, ncyc, classes_needed, rng, sub)
        except _Exhausted:
            base = None
        meter.nodes += sub.nodes
        if base is None and (meter.nodes > meter.budget.nodes or time.monotonic() > meter.deadline):
            raise NotFound(f"no cyclic (k,1)-CF({g}^{u}) base found within budget")
    parts = frame_parts_cyclic(g, u)
    first = [tuple(res(x, N) for x in c) for c in base]
    first += [tuple(res(x + half, N) for x in c) for c in base]
    hol = FactorClass.of(HOLEY, first, k)
    classes = [hol.translate((t,)) for t in range(half)]
    cert = Certificate.build(
        HostGraph.multipartite(parts),
        classes,
        {"construction": "cyclic_frame_search", "k": k, "g": g, "u": u, "seed": seed,
         "base": [list(c) for c in base]},
    )
    rep = check_frame(cert, parts, k)
    if not rep.ok:
        raise Rejected("frame search produced an invalid frame:\n" + rep.summary(), "INVALID")
    if use_cache:
        store_cached(cert, "frame", k=k, g=g, u=u)
    return cert


def _frame_base_once(k, N, half, u, ncyc, classes_needed, rng, meter):
    pairs_left = {x for x in range(1, half) if x % u} | {x for x in range(half + 1, N) if x % u}
    pair_of = lambda x: x % half
    taken_pairs: set[int] = set()
    used: set[int] = set()
    cycles: list[list[int]] = []
    cls = lambda a, b: min((a - b) % N, (b - a) % N)
    points = sorted(pairs_left)

    def extend(path: list[int]) -> bool:
        meter.tick()
        last = path[-1]
        if len(path) == k:
            c = cls(last, path[0])
            if c in used or c not in classes_needed:
                return False
            used.add(c)
            cycles.append(list(path))
            if start():
                return True
            cycles.pop()
            used.discard(c)
            return False
        cands = points[:]
        rng.shuffle(cands)
        for x in cands:
            if pair_of(x) in taken_pairs or x in path:
                continue
            c = cls(last, x)
            if c in used or c not in classes_needed:
                continue
            used.add(c)
            taken_pairs.add(pair_of(x))
            path.append(x)
            if extend(path):
                return True
            path.pop()
            taken_pairs.discard(pair_of(x))
            used.discard(c)
        return False

    def start() -> bool:
        if len(cycles) == ncyc:
            return True
        # smallest free pair starts the next cycle (fixes rotation symmetry)
        free = [p for p in range(1, half) if p % u and p not in taken_pairs]
        p = free[0]
        for x in (p, p + half) if rng.random() < 0.5 else (p + half, p):
            taken_pairs.add(p)
            if extend([x]):
                return True
            taken_pairs.discard(p)
        return False

    return cycles if start() else None


# ---------------------------------------------------------------------------
# resolvable factorizations of small hosts

RESOLVABLE_EXCEPTIONS = {(3, 3, 2), (3, 6, 2), (3, 3, 6), (6, 2, 6)}


def resolvable_conditions(k: int, u: int, g: int) -> None:
    """Raise NecessaryFail unless K_u[g] has a C_k-factorization."""
    cite = "Theorem 1.1"
    if (g * (u - 1)) % 2:
        raise NecessaryFail(f"K_{u}[{g}] has odd degree", cite)
    if (g * u) % k:
        raise NecessaryFail(f"{k} does not divide the order {g * u}", cite)
    if u == 2 and k % 2:
        raise NecessaryFail("a bipartite host has no odd cycles", cite)
    if (k, u, g) in RESOLVABLE_EXCEPTIONS:
        raise NecessaryFail(f"(k,u,g)=({k},{u},{g}) is an exception", cite)


def walecki(vertices: Sequence[Vertex]) -> list[FactorClass]:
    """Hamiltonian cycle factorization of K_v, v odd: zigzag rotated about a fixed point."""
    v = len(vertices)
    if v % 2 == 0 or v < 3:
        raise Rejected("the zigzag factorization needs odd order >= 3", "REJECT_PARAMS")
    r = v - 1
    hub, ring = vertices[-1], vertices[:-1]
    zig = [0]
    for i in range(1, r // 2 + 1):
        zig += [i, r - i] if i != r - i else [i]
    zig = zig[:r]
    out = []
    for s in range(r // 2):
        out.append(FactorClass.of(UNIFORM, [[hub] + [ring[(z + s) % r] for z in zig]], v))
    return out


def search_resolvable(host: HostGraph, k: int, budget: Budget | int | None = None,
                      seed: int = 0) -> Certificate:
    """Plain backtracking C_k-factorization of a small host (a few dozen vertices)."""
    vertices = sorted(host.vertex_set())
    if host.kind == "multipartite":
        sizes = {len(p) for p in host.parts}
        if len(sizes) == 1:
            resolvable_conditions(k, len(host.parts), sizes.pop())
    elif host.kind == "complete":
        resolvable_conditions(k, len(vertices), 1)
        if k == len(vertices):
            return _released(Certificate.build(
                host, walecki(vertices), {"construction": "walecki", "k": k}))
    if len(vertices) % k:
        raise NecessaryFail(f"{k} does not divide the order {len(vertices)}")
    adj: dict[Vertex, set[Vertex]] = {v: set() for v in vertices}
    for a, b in materialize_edges(host):
        adj[a].add(b)
        adj[b].add(a)
    degrees = {len(s) for s in adj.values()}
    if len(degrees) != 1 or degrees.pop() % 2:
        raise NecessaryFail("host is not regular of even degree")
    meter = _Meter(_budget(budget))
    rng = random.Random(seed)
    factors: list[list[tuple[Vertex, ...]]] = []
    nfactors = len(next(iter(adj.values()))) // 2

    def build_factor(cycles, uncovered) -> bool:
        meter.tick()
        if not uncovered:
            factors.append(list(cycles))
            if solve():
                return True
            factors.pop()
            return False
        start = min(uncovered)
        return grow([start], uncovered - {start}, cycles)

    def grow(path, uncovered, cycles) -> bool:
        meter.tick()
        last = path[-1]
        if len(path) == k:
            if path[0] in adj[last]:
                _take(path)
                if build_factor(cycles + [tuple(path)], uncovered):
                    return True
                _give(path)
            return False
        cands = sorted(adj[last] & uncovered)
        rng.shuffle(cands)
        for w in cands:
            path.append(w)
            if grow(path, uncovered - {w}, cycles):
                return True
            path.pop()
        return False

    def _take(path):
        for a, b in zip(path, path[1:] + path[:1]):
            adj[a].discard(b)
            adj[b].discard(a)

    def _give(path):
        for a, b in zip(path, path[1:] + path[:1]):
            adj[a].add(b)
            adj[b].add(a)

    def solve() -> bool:
        if len(factors) == nfactors:
            return True
        return build_factor([], frozenset(vertices))

    try:
        ok = solve()
    except (_Exhausted, RecursionError):
        # recursion depth grows with the edge count; too deep means too big for this search
        ok = False
    if not ok:
        raise NotFound(f"no C_{k}-factorization of {host.describe()} within budget")
    classes = [FactorClass.of(UNIFORM, f, k) for f in factors]
    cert = Certificate.build(host, classes, {"construction": "resolvable_search", "k": k, "seed": seed})
    return _released(cert)


# ---------------------------------------------------------------------------
# k-ARCS(2k+1) base classes for small k


def search_arcs_2k1(k: int, budget: Budget | int | None = None, seed: int = 0,
                    use_cache: bool = True) -> Certificate:
    """Find a base class meeting the development conditions (two k-cycles, step d) and expand it."""
    from .arcs import ArcsTemplate, expand_arcs

    if use_cache:
        cached = load_cached("arcs", k=k, t=1)
        if cached is not None:
            return cached
    meter = _Meter(_budget(budget))
    for d in range(1, k // 2 + 1):
        if _gcd(d, k) != 1:
            continue
        attempt = 0
        while True:
            rng = random.Random(seed * 31 + attempt)
            attempt += 1
            sub = _Meter(Budget(100_000, meter.budget.seconds))
            try:
                cycles = _arcs_base_once(k, d, rng, sub)
            except _Exhausted:
                cycles = None
            meter.nodes += sub.nodes
            if cycles is not None:
                tpl = ArcsTemplate(k, d, "A", tuple(tuple(c) for c in cycles), "searched")
                if check_lemma_conditions(tpl.base_class(), "A", k, d).ok:
                    cert = expand_arcs(tpl).with_provenance(construction="arcs_search", seed=seed)
                    if use_cache:
                        store_cached(cert, "arcs", k=k, t=1)
                    return cert
            if attempt >= 50 or meter.nodes > meter.budget.nodes or time.monotonic() > meter.deadline:
                break
    raise NotFound(f"no {k}-ARCS({2 * k + 1}) base class found within budget")


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _arcs_base_once(k, d, rng, meter):
    """Two k-cycles on Z_k x Z_2 + inf missing (0,1), differences as the development needs."""
    I = "inf"
    points = [I] + [(x, j) for x in range(k) for j in range(2) if (x, j) != (0, 1)]
    need = {(0, 0): {x: 1 for x in range(1, k)},
            (0, 1): {x: 1 for x in range(k)},
            (1, 1): {x: 1 for x in range(1, k) if x not in (d % k, (-d) % k)}}
    have = {p: dict.fromkeys(v, 0) for p, v in need.items()}
    inf_levels: list[int] = []

    def diffs(a, b):
        if a == I or b == I:
            return None
        (x, j), (y, jj) = a, b
        out = []
        for (p, q, s, t) in ((x, y, j, jj), (y, x, jj, j)):
            if (s, t) == (1, 0):
                continue
            out.append(((s, t), (p - q) % k))
        return out

    def can_add(a, b):
        if a == I or b == I:
            other = b if a == I else a
            return other[1] not in inf_levels
        ds = diffs(a, b)
        tmp = {}
        for pair, x in ds:
            if x not in need[pair]:
                return False
            tmp[(pair, x)] = tmp.get((pair, x), 0) + 1
            if have[pair][x] + tmp[(pair, x)] > need[pair][x]:
                return False
        return True

    def add(a, b, sign):
        if a == I or b == I:
            other = b if a == I else a
            if sign > 0:
                inf_levels.append(other[1])
            else:
                inf_levels.remove(other[1])
            return
        for pair, x in diffs(a, b):
            have[pair][x] += sign

    cycles: list[list] = []
    left = set(points)

    def extend(path) -> bool:
        meter.tick()
        last = path[-1]
        if len(path) == k:
            if not can_add(last, path[0]):
                return False
            add(last, path[0], 1)
            cycles.append(list(path))
            if nxt():
                return True
            cycles.pop()
            add(last, path[0], -1)
            return False
        cands = list(left)
        rng.shuffle(cands)
        for w in cands:
            if not can_add(last, w):
                continue
            add(last, w, 1)
            left.discard(w)
            path.append(w)
            if extend(path):
                return True
            path.pop()
            left.add(w)
            add(last, w, -1)
        return False

    def nxt() -> bool:
        if len(cycles) == 2:
            return True
        start = I if I in left else min(left)
        left.discard(start)
        if extend([start]):
            return True
        left.add(start)
        return False

    return cycles if nxt() else None
