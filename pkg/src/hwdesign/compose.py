"""Recursive assembly: blow-ups, filling groups, classical ingredients and the full pipelines."""

from __future__ import annotations

import logging
from math import gcd
from typing import Callable, Sequence

from . import arcs as arcs_mod
from . import cayley, search
from .errors import MissingIngredient, NotFound, Rejected
from .fixtures import fixture
from .model import (
    ONE_FACTOR,
    UNIFORM,
    Certificate,
    FactorClass,
    HostGraph,
    Vertex,
    edge,
    res,
)
from .verify import require_valid

log = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# helpers


def _parts(host: HostGraph) -> list[tuple[Vertex, ...]]:
    """Parts of a K_u[g] host; a complete graph counts as K_u[1]."""
    if host.kind == "multipartite":
        return [tuple(p) for p in host.parts]
    if host.kind == "complete":
        return [(v,) for v in host.vertices]
    if host.kind == "complete_minus_1f":
        raise Rejected("a complete graph minus a 1-factor is not a K_u[g] host", "REJECT_PROFILE")
    raise Rejected(f"host {host.describe()} is not of the form K_u[g]", "REJECT_PROFILE")


def _check_lengths(cert: Certificate, lengths: set[int], what: str) -> None:
    for c in cert.classes:
        if c.kind == ONE_FACTOR:
            continue
        if c.kind != UNIFORM or c.k not in lengths:
            raise Rejected(f"{what} has a {c.profile_key()} class; expected lengths {sorted(lengths)}",
                           "REJECT_PROFILE")


def _sorted_factors(cert: Certificate) -> list[FactorClass]:
    return sorted((c for c in cert.classes if c.kind != ONE_FACTOR), key=lambda c: c.k)


def as_hw(cert: Certificate) -> Certificate:
    """View a factorization of K_u[2] (parts = pairs) as one of K_2u minus a 1-factor."""
    if cert.host.kind == "multipartite" and all(len(p) == 2 for p in cert.host.parts):
        verts = [v for p in cert.host.parts for v in p]
        host = HostGraph.complete_minus_1f(verts, cert.host.parts)
        return require_valid(Certificate.build(host, cert.classes, cert.provenance))
    if cert.host.kind == "multipartite" and all(len(p) == 1 for p in cert.host.parts):
        host = HostGraph.complete([p[0] for p in cert.host.parts])
        return require_valid(Certificate.build(host, cert.classes, cert.provenance))
    return cert


def _tree(cert: Certificate) -> dict:
    return dict(cert.provenance)


# ---------------------------------------------------------------------------
# composition


def c_rgdd(outer: Certificate, inner: Certificate | Sequence[Certificate], m: int, n: int) -> Certificate:
    """Fill each part of an HW(K_u[g]) with an HW(g); the i-th inner factors of all copies unite."""
    parts = _parts(outer.host)
    u, g = len(parts), len(parts[0])
    if any(len(p) != g for p in parts):
        raise Rejected("parts of the outer design have different sizes", "REJECT_PROFILE")
    inners = [inner] * u if isinstance(inner, Certificate) else list(inner)
    if len(inners) != u:
        raise Rejected(f"{len(inners)} inner designs for {u} parts", "REJECT_PROFILE")
    lengths = {m, n}
    _check_lengths(outer, lengths, "outer design")
    for cert in {id(c): c for c in [outer] + inners}.values():
        require_valid(cert)
    for c in inners:
        _check_lengths(c, lengths, "inner design")
        if c.host.order() != g:
            raise Rejected(f"inner design has {c.host.order()} vertices, parts have {g}", "REJECT_PROFILE")
        if c.profile != inners[0].profile:
            raise Rejected("inner designs have different profiles", "REJECT_PROFILE")
    outer_1f = [c for c in outer.classes if c.kind == ONE_FACTOR]
    inner_1f = inners[0].host.kind == "complete_minus_1f"
    if outer_1f and inner_1f:
        raise Rejected("both the outer and the inner designs carry a 1-factor", "REJECT_PROFILE")
    if len(outer_1f) > 1:
        raise Rejected("outer design has more than one 1-factor", "REJECT_PROFILE")

    classes = [c for c in outer.classes if c.kind != ONE_FACTOR]
    maps = []
    for part, c in zip(parts, inners):
        verts = sorted(c.host.vertex_set())
        maps.append(dict(zip(verts, sorted(part))))
    per_copy = [_sorted_factors(c) for c in inners]
    for j in range(len(per_copy[0])):
        k = per_copy[0][j].k
        cycles = [[mp[v] for v in cyc] for mp, fs in zip(maps, per_copy) for cyc in fs[j].cycles]
        classes.append(FactorClass.of(UNIFORM, cycles, k))

    everything = [v for p in parts for v in p]
    removed: list = []
    if inner_1f:
        removed = [(mp[a], mp[b]) for mp, c in zip(maps, inners) for a, b in c.host.one_factor]
    elif outer_1f:
        removed = list(outer_1f[0].cycles)
    host = HostGraph.complete_minus_1f(everything, removed) if removed else HostGraph.complete(everything)
    if len(everything) % 2 == 0 and not removed:
        raise Rejected("even order needs a 1-factor from one side", "REJECT_PROFILE")
    prov = {"construction": "c_rgdd", "u": u, "g": g, "outer": _tree(outer), "inner": _tree(inners[0])}
    return require_valid(Certificate.build(host, classes, prov))


def l351(outer: Certificate, fills: Sequence[Certificate], m2: int, n2: int) -> Certificate:
    """Blow every vertex of an HW(K_u[g]) up to s copies; each outer factor becomes s factors.

    ``fills[i]`` is an HW(C_k[s]) for the i-th outer factor (k its cycle length);
    cycle (v_0..v_{k-1}) carries the fill with v_x in the role of column x.
    """
    parts = _parts(outer.host)
    if any(c.kind == ONE_FACTOR for c in outer.classes):
        raise Rejected("outer design with a 1-factor cannot be blown up here", "REJECT_PROFILE")
    factors = list(outer.classes)
    if len(fills) != len(factors):
        raise Rejected(f"{len(fills)} fillings for {len(factors)} outer factors", "REJECT_PROFILE")
    require_valid(outer)
    s = None
    for f, c in zip(fills, factors):
        if f.host.kind != "lex_cycle" or f.host.m != c.k:
            raise Rejected(f"a C_{c.k}-factor needs a filling on C_{c.k}[s], got {f.host.describe()}",
                           "REJECT_PROFILE")
        s = f.host.n if s is None else s
        if f.host.n != s:
            raise Rejected("fillings use different blow-up sizes", "REJECT_PROFILE")
        _check_lengths(f, {m2, n2}, "filling")
    for f in {id(f): f for f in fills}.values():
        require_valid(f)
    verts = sorted(v for p in parts for v in p)
    index = {v: p for p, v in enumerate(verts)}
    N = len(verts)

    def blown(v: Vertex, y: int) -> Vertex:
        return res((index[v], y), (N, s))

    classes = []
    for f, c in zip(fills, factors):
        for fc in f.classes:
            cycles = []
            for cyc in c.cycles:
                cycles += [[blown(cyc[w.coords[0]], w.coords[1]) for w in fcyc] for fcyc in fc.cycles]
            classes.append(FactorClass.of(UNIFORM, cycles, fc.k))
    host = HostGraph.multipartite([[blown(v, y) for v in p for y in range(s)] for p in parts])
    prov = {"construction": "l351", "s": s, "outer": _tree(outer),
            "fills": [f.provenance.get("construction", f.provenance.get("fixture", "")) for f in fills]}
    cert = require_valid(Certificate.build(host, classes, prov))
    alpha = sum(f.count(f"C{m2}") for f in fills)
    if cert.count(f"C{m2}") != alpha or len(cert.classes) != len(factors) * s:
        raise Rejected("blow-up count identity failed", "REJECT_PROFILE")
    return cert


# ---------------------------------------------------------------------------
# classical ingredients


def hamilton(v: int) -> Certificate:
    """Hamilton cycle decomposition of K_v, v odd."""
    verts = [res(i, v) for i in range(v)]
    cert = Certificate.build(HostGraph.complete(verts), search.walecki(verts), {"construction": "walecki", "v": v})
    return require_valid(cert)


def cm_factorization(m: int, n: int, budget=None) -> Certificate:
    """C_m-factorization of C_m[n]."""
    if (m, n) == (3, 6) or (n == 2 and m % 2 == 1):
        raise search.NecessaryFail(f"C_{m}[{n}] has no C_{m}-factorization", "Theorem 3.1 exception")
    host = HostGraph.lex_cycle(m, n)
    if n == 1:
        return require_valid(Certificate.build(host, [FactorClass.of(UNIFORM, [[res((x, 0), (m, 1)) for x in range(m)]], m)]))
    if n % 2 == 1 or m % 2 == 0:
        table = cayley.rows_for_classes(m, n, list(range(n)), budget)
        classes = cayley.develop_rows(table)
        return require_valid(Certificate.build(host, classes, {"construction": "cm_rows", "m": m, "n": n}))
    cert = search.load_cached("cm", m=m, n=n)
    if cert is None:
        cert = search.search_resolvable(host, m, budget).with_provenance(construction="cm_search")
        search.store_cached(cert, "cm", m=m, n=n)
    return cert


def cycle_fill(m: int, s: int, k: int, budget=None) -> Certificate:
    """C_k-factorization of C_m[s] (all s factors of the same length k)."""
    if k == m:
        return cm_factorization(m, s, budget)
    host = HostGraph.lex_cycle(m, s)
    cached = search.load_cached("cycle_fill", m=m, s=s, k=k)
    if cached is not None:
        return cached
    if k % 2 and (m % 2 == 0 or k < m):
        raise search.NecessaryFail(f"C_{m}[{s}] has no {k}-cycles", "parity of the column steps")
    if (m * s) % k:
        raise search.NecessaryFail(f"{k} does not divide {m * s}")
    try:
        cycles = search.search_orbit_factor(m, s, k, list(range(s)), (0, 1), s, _half(budget))
        base = FactorClass.of(UNIFORM, cycles, k)
        classes = [base.translate((0, i)) for i in range(s)]
        cert = Certificate.build(host, classes, {"construction": "cycle_fill", "m": m, "s": s, "k": k})
    except NotFound:
        cert = search.search_resolvable(host, k, _half(budget)).with_provenance(
            construction="cycle_fill", m=m, s=s, k=k)
    require_valid(cert)
    search.store_cached(cert, "cycle_fill", m=m, s=s, k=k)
    return cert


def _half(budget) -> search.Budget:
    b = search._budget(budget)
    return search.Budget(b.nodes // 2, b.seconds / 2)


def cmn_factorization(m: int, n: int, budget=None) -> Certificate:
    """C_{mn}-factorization of C_m[n] (Hamilton cycles)."""
    if n == 1:
        return cm_factorization(m, 1)
    return cycle_fill(m, n, m * n, budget)


def resolvable(k: int, u: int, g: int = 1, budget=None) -> Certificate:
    """C_k-factorization of K_u[g] (K_u when g = 1); stored files take precedence."""
    cached = search.load_cached("resolvable", k=k, u=u, g=g)
    if cached is not None:
        return cached
    search.resolvable_conditions(k, u, g)
    cert = _resolvable_build(k, u, g, budget)
    cert = require_valid(cert)
    if cert.provenance.get("construction") in ("resolvable_search", "c_rgdd", "l351"):
        search.store_cached(cert, "resolvable", k=k, u=u, g=g)
    return cert


def _resolvable_build(k: int, u: int, g: int, budget) -> Certificate:
    if g == 1 and k == u:
        return hamilton(u)
    if g == 1 and u % k == 0 and u > k and k % 2 == 1:
        # K_u = K_{u/k}[k] plus u/k copies of K_k
        outer = resolvable(k, u // k, k, budget)
        return c_rgdd(outer, hamilton(k), k, k)
    if g > 1:
        # blow up a factorization of K_u by g, filling each cycle
        for k2 in _outer_lengths(u, k):
            try:
                outer = resolvable(k2, u, 1, budget)
                fill = cycle_fill(k2, g, k, budget)
            except (NotFound, search.NecessaryFail, Rejected):
                continue
            return l351(outer, [fill] * len(outer.classes), k, k)
    if g == 1:
        host = HostGraph.complete([res(i, u) for i in range(u)])
    else:
        host = HostGraph.multipartite([[res((p, y), (u, g)) for y in range(g)] for p in range(u)])
    return search.search_resolvable(host, k, budget)


def _outer_lengths(u: int, k: int) -> list[int]:
    """Cycle lengths k2 <= k with a C_k2-factorization of K_u to blow up."""
    out = []
    if u % 2 == 1 and u <= k:
        out.append(u)
    for d in range(3, k + 1, 2):
        if u % d == 0 and d not in out and (k - d) % 2 == 0 and u % 2 == 1:
            out.append(d)
    return out


def classical(request: str, **params) -> Certificate:
    """Named small ingredients: 'hamilton' (v), 'resolvable' (k, u, g), 'cm' / 'cmn' (m, n)."""
    table: dict[str, Callable[..., Certificate]] = {
        "hamilton": hamilton,
        "resolvable": resolvable,
        "cm": cm_factorization,
        "cmn": cmn_factorization,
    }
    if request not in table:
        raise Rejected(f"unknown request {request!r}; known: {', '.join(table)}", "REJECT_PARAMS")
    return table[request](**params)


# ---------------------------------------------------------------------------
# HW(C_m[n]; m, n; n - beta, beta) fillings


def cm_n_fill(m: int, n: int, beta: int, budget=None) -> Certificate:
    """A filling of C_m[n] with n - beta C_m-factors and beta C_n-factors."""
    if not 0 <= beta <= n:
        raise Rejected(f"beta={beta} outside [0, {n}]", "REJECT_PARAMS")
    if beta == 0:
        return cm_factorization(m, n, budget)
    if m == n:
        return cm_factorization(m, n, budget)
    if beta == n - 2 and n % 6 == 3 and n >= 9:
        return cayley.lemma_cmn_two(m, n, budget)
    if n == 9 and beta == 5 and m in (5, 7, 9):
        return cayley.lemma_cm9(m, budget)
    cached = search.load_cached("cm_n_fill", m=m, n=n, beta=beta)
    if cached is not None:
        return cached
    bud = cayley.DifferenceBudget.for_classes(m, n, range(n))
    classes: list[FactorClass] = []
    plan = []
    pairs_needed = beta // 2
    if beta % 2:
        if beta < 5:
            raise NotFound(f"no allocation for beta={beta} on C_{m}[{n}]")
        zero, how = cayley.zero_block_cn(m, n, budget)
        bud.consume("zero block", [0, 1, 2, n - 1, n - 2])
        classes += zero
        plan += how
        pairs_needed = (beta - 5) // 2
    free = sorted({min(d, n - d) for d in bud.remaining.elements() if d})
    coprime = [d for d in free if gcd(d, n) == 1]
    if len(coprime) < pairs_needed:
        raise NotFound(f"not enough classes coprime to {n} for {pairs_needed} two_Cn blocks")
    for d in coprime[:pairs_needed]:
        req = cayley.two_Cn(d)
        bud.consume(req.label, req.forward(n))
        classes += cayley.difference_factorization(m, n, req, budget)
        plan.append(req.label)
    row_fw = sorted(bud.remaining.elements())
    if row_fw:
        table = cayley.rows_for_classes(m, n, row_fw, budget)
        bud.consume("rows", row_fw)
        classes += cayley.develop_rows(table)
        plan.append(f"rows {row_fw}")
    cert = require_valid(Certificate.build(HostGraph.lex_cycle(m, n), classes,
                                           {"construction": "cm_n_fill", "m": m, "n": n, "beta": beta,
                                            "blocks": plan}))
    search.store_cached(cert, "cm_n_fill", m=m, n=n, beta=beta)
    return cert


# ---------------------------------------------------------------------------
# pipelines


def _expect(cert: Certificate, m: int, n: int, alpha: int, beta: int) -> Certificate:
    got = cert.hw_counts(m, n)
    if got != (alpha, beta):
        raise Rejected(f"pipeline produced {got}, expected {(alpha, beta)}", "PROFILE_MISMATCH")
    return cert


def pipeline_9u(u: int, beta: int, budget=None) -> Certificate:
    """HW(9u; u, 9; alpha, beta) for u in {5, 7}, beta in {9, 11}."""
    if u not in (5, 7) or beta not in (9, 11):
        raise Rejected(f"need u in {{5,7}} and beta in {{9,11}}, got u={u}, beta={beta}", "REJECT_PARAMS")
    a = 13 - beta
    outer = hamilton(u)
    special = cayley.lemma_cmn_two(u, 9, budget) if a == 2 else cayley.lemma_cm9(u, budget)
    plain = cm_factorization(u, 9, budget)
    fills = [special] + [plain] * (len(outer.classes) - 1)
    blown = l351(outer, fills, u, 9)
    cert = c_rgdd(blown, hamilton(9), u, 9)
    alpha = 9 * (u - 3) // 2 + a
    return _expect(cert.with_provenance(pipeline="Lemma4.8"), u, 9, alpha, beta)


def pipeline_39t(t: int, budget=None) -> Certificate:
    """HW(39t; 3, 13; (39t-11)/2, 5) for odd t > 1."""
    if t % 2 == 0 or t < 3:
        raise Rejected(f"need odd t > 1, got {t}", "REJECT_PARAMS")
    try:
        inner = resolvable(3, 39, 1, budget)
    except NotFound:
        raise MissingIngredient(["HW(39;3,13;19,0)"], "C_3-factorization of K_39, not found by search") from None
    outer = resolvable(3, t, 3, budget)
    fills = [fixture("L4.2")] + [cm_factorization(3, 13, budget)] * (len(outer.classes) - 1)
    blown = l351(outer, fills, 3, 13)
    cert = c_rgdd(blown, inner, 3, 13)
    return _expect(cert.with_provenance(pipeline="Lemma4.9"), 3, 13, (39 * t - 11) // 2, 5)


def pipeline_9tu(t: int, u: int, budget=None) -> Certificate:
    """HW(9tu; u, 9; alpha, u) for odd t > 1, u in {5, 7}."""
    if t % 2 == 0 or t < 3 or u not in (5, 7):
        raise Rejected(f"need odd t > 1 and u in {{5,7}}, got t={t}, u={u}", "REJECT_PARAMS")
    a = 9 - u
    missing = []
    try:
        inner = resolvable(u, 9 * u, 1, budget)
    except NotFound:
        missing.append(f"HW({9 * u};{u},9;{(9 * u - 1) // 2},0)")
    try:
        outer = resolvable(u, t, u, budget)
    except NotFound:
        missing.append(f"C_{u}-factorization of K_{t}[{u}]")
    if missing:
        raise MissingIngredient(missing, "uniform factorizations not found by search")
    special = cayley.lemma_cmn_two(u, 9, budget) if a == 2 else cayley.lemma_cm9(u, budget)
    fills = [special] + [cm_factorization(u, 9, budget)] * (len(outer.classes) - 1)
    cert = c_rgdd(l351(outer, fills, u, 9), inner, u, 9)
    v = 9 * t * u
    return _expect(cert.with_provenance(pipeline="Lemma4.10"), u, 9, (v - 1) // 2 - u, u)


def arcs_beta_set(k: int, t: int) -> set[int]:
    """Values of beta covered by the weighting construction for m = k, n = 2kt+1."""
    top = k * (k - 1) * t + (k - 3) // 2
    J = {4, 6} | set(range(8, top + 1))
    if k == 3:
        if t in (1, 2):
            return set()
        return {b for b in set(range(4, 6 * t - 5)) | {6 * t} if b % 2 == 0}
    if k == 5:
        return J - {20 * t - 3, 20 * t - 1}
    if k in (7, 9):
        return J
    if k >= 11 and t != 2:
        return J
    return set()


def _weighting_plan(k: int, t: int, beta: int) -> tuple[int, list[int]] | None:
    """Choose 2l and the per-cycle beta_i adding up to beta."""
    n = 2 * k * t + 1
    r = (k - 1) // 2
    bad = {1, 3, n - 4, n - 2}
    ls = [0] + list(range(3, k * t - 1))
    for l in ls:
        rest = beta - (2 * k * t - 2 * l)
        if rest < 0 or rest > (r - 1) * n:
            continue
        if r == 1:
            if rest == 0:
                return l, []
            continue
        q, b = divmod(rest, n)
        plans = []
        if b == 0:
            plans.append([n] * q)
        elif b not in bad:
            plans.append([n] * q + [b])
        if q >= 1:
            for x in range(n + 1):
                y = n + b - x
                if 0 <= y <= n and x not in bad and y not in bad:
                    plans.append([n] * (q - 1) + [x, y])
                    break
        for p in plans:
            if len(p) <= r - 1:
                return l, p + [0] * (r - 1 - len(p))
    return None


def pipeline_weighting(k: int, t: int, beta: int, budget=None) -> Certificate:
    """HW(k(2kt+1); k, 2kt+1; alpha, beta) by weighting a Hamilton decomposition of K_k."""
    if k % 2 == 0 or k < 3 or t < 1:
        raise Rejected(f"need odd k >= 3 and t >= 1, got k={k}, t={t}", "REJECT_PARAMS")
    if beta not in arcs_beta_set(k, t):
        raise Rejected(f"beta={beta} is outside the covered range for k={k}, t={t}", "REJECT_PARAMS")
    plan = _weighting_plan(k, t, beta)
    if plan is None:
        raise NotFound(f"no split of beta={beta} into allowed pieces")
    l, betas = plan
    n = 2 * k * t + 1
    arcs_cert = arcs_mod.build_arcs(k, t, budget)
    ham = search.walecki(list(range(k)))
    cycles = [c.cycles[0] for c in ham]
    last = cycles[-1]
    perm = {v: i for i, v in enumerate(last)}
    cycles = [[perm[v] for v in c] for c in cycles]
    classes: list[FactorClass] = []
    fills = []
    for cyc, b in zip(cycles[:-1], betas):
        fill = cm_n_fill(k, n, b, budget)
        fills.append(fill.provenance.get("construction", ""))
        for fc in fill.classes:
            classes.append(FactorClass.of(
                UNIFORM, [[res((cyc[w.coords[0]], w.coords[1]), (k, n)) for w in c] for c in fc.cycles], fc.k))
    part_00 = cayley.construction_00(arcs_cert)
    part_2l = cayley.construction_2l(k, t, l, budget)
    classes += list(part_00.classes) + list(part_2l.classes)
    verts = [res((x, y), (k, n)) for x in range(k) for y in range(n)]
    prov = {"pipeline": "Theorem1.4", "k": k, "t": t, "l": l, "betas": betas, "fills": fills,
            "arcs": arcs_cert.provenance.get("construction", "")}
    cert = require_valid(Certificate.build(HostGraph.complete(verts), classes, prov))
    v = k * n
    return _expect(cert, k, n, (v - 1) // 2 - beta, beta)


def pipeline_4k(k: int, t: int, u: int, alpha: int, budget=None) -> Certificate:
    """HW(4ktu; 4k, 4kt; alpha, (v-2)/2 - alpha); the HW(4kt) base is read from a stored file."""
    if k < 1 or t < 2 or u < 1:
        raise Rejected(f"need k >= 1, t >= 2, u >= 1; got k={k}, t={t}, u={u}", "REJECT_PARAMS")
    m, n, v = 4 * k, 4 * k * t, 4 * k * t * u
    total = (v - 2) // 2
    if not 0 <= alpha <= total:
        raise Rejected(f"alpha={alpha} outside [0, {total}]", "REJECT_PARAMS")
    slots = 2 * k * (u - 1)
    j = min(alpha // t, slots)
    base_alpha = alpha - j * t
    if base_alpha > 2 * k * t - 1:
        raise Rejected(f"alpha={alpha} cannot be split", "REJECT_PARAMS")
    name = f"HW({n};{m},{n};{base_alpha},{2 * k * t - 1 - base_alpha})"
    base = search.load_cached("external", v=n, m=m, n=n, alpha=base_alpha)
    if base is None:
        raise MissingIngredient([f"EXTERNAL {name}"], "Theorem 1.6 of the cited work on HW(v;4k,v)")
    if u == 1:
        return _expect(base, m, n, alpha, total - alpha)
    outer = resolvable(m, u, m, budget)
    full = cm_factorization(m, t, budget)
    ham = cmn_factorization(m, t, budget)
    fills = [full] * j + [ham] * (len(outer.classes) - j)
    cert = c_rgdd(l351(outer, fills, m, n), base, m, n)
    return _expect(cert.with_provenance(pipeline="Theorem1.5"), m, n, alpha, total - alpha)


PIPELINES: dict[str, Callable[..., Certificate]] = {
    "Lemma4.8": pipeline_9u,
    "Lemma4.9": pipeline_39t,
    "Lemma4.10": pipeline_9tu,
    "Theorem1.4": pipeline_weighting,
    "Theorem1.5": pipeline_4k,
}


def pipeline(name: str, **params) -> Certificate:
    if name not in PIPELINES:
        raise Rejected(f"unknown pipeline {name!r}; known: {', '.join(PIPELINES)}", "REJECT_PARAMS")
    return PIPELINES[name](**params)
