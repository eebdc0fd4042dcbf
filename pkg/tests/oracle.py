"""Brute-force certificate checker, written without the package's verifier or edge code.

Vertices are turned into plain hashable keys; the host's adjacency is decided
pair by pair from the host description, then every pair's cover count is
compared with its multiplicity.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations, product


def _key(v):
    return (v.tag, v.name, tuple(v.coords))


def _host_vertices(host):
    if host.kind in ("complete", "complete_minus_1f"):
        return [_key(v) for v in host.vertices]
    if host.kind == "multipartite":
        return [_key(v) for p in host.parts for v in p]
    return [(2, "", tuple(c)) for c in product(*(range(q) for q in host.moduli))]


def _multiplicity(host, a, b, part_of, removed):
    """How many parallel edges the host has between keys a != b."""
    if host.kind == "complete":
        return 1
    if host.kind == "complete_minus_1f":
        return 0 if frozenset((a, b)) in removed else 1
    if host.kind == "multipartite":
        return 0 if part_of[a] == part_of[b] else 1
    ca, cb = a[2], b[2]
    if host.kind == "lex_cycle":
        dx = (cb[0] - ca[0]) % host.m
        return 1 if dx in (1, host.m - 1) else 0
    if host.kind == "cayley":
        diff = tuple((y - x) % q for x, y, q in zip(ca, cb, host.moduli))
        return sum(1 for s in host.connection if tuple(s) == diff)
    raise ValueError(host.kind)


def brute_force_valid(cert) -> bool:
    host = cert.host
    verts = _host_vertices(host)
    vset = set(verts)
    if len(vset) != len(verts):
        return False
    part_of = {}
    if host.kind == "multipartite":
        for i, p in enumerate(host.parts):
            for v in p:
                part_of[_key(v)] = i
    removed = {frozenset((_key(a), _key(b))) for a, b in host.one_factor}

    covered: Counter = Counter()
    for cls in cert.classes:
        touched: list = []
        for cyc in cls.cycles:
            keys = [_key(v) for v in cyc]
            touched += keys
            if cls.kind == "one_factor":
                if len(keys) != 2 or keys[0] == keys[1]:
                    return False
                covered[frozenset(keys)] += 1
                continue
            if len(keys) < 3 or len(set(keys)) != len(keys):
                return False
            if cls.kind != "mixed" and cls.k is not None and len(keys) != cls.k:
                return False
            for i in range(len(keys)):
                covered[frozenset((keys[i], keys[(i + 1) % len(keys)]))] += 1
        if len(set(touched)) != len(touched) or not set(touched) <= vset:
            return False
        if cls.kind in ("uniform", "mixed", "one_factor") and set(touched) != vset:
            return False
        if cls.kind == "almost_parallel":
            if cls.missing is None or _key(cls.missing) in touched or len(touched) != len(vset) - 1:
                return False

        if cls.kind == "half_parallel" and cls.k and len(cls.cycles) * 2 * cls.k != len(vset) - 1:
            return False

    for a, b in combinations(verts, 2):
        if covered.pop(frozenset((a, b)), 0) != _multiplicity(host, a, b, part_of, removed):
            return False
    if covered:
        return False  # pairs outside the vertex set
    ap = sum(1 for c in cert.classes if c.kind == "almost_parallel")
    half = sum(1 for c in cert.classes if c.kind == "half_parallel")
    if (ap or half) and (ap != (len(verts) - 1) // 2 or half != 1 or ap + half != len(cert.classes)):
        return False
    profile = Counter(c.profile_key() for c in cert.classes)
    return dict(profile) == dict(cert.profile)
