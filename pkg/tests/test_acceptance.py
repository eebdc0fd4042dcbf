"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line."""

from __future__ import annotations

import random
import time
from collections import Counter

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from hwdesign import arcs, cayley, certfile, compose, search
from hwdesign.cli import main
from hwdesign.fixtures import FIXTURES, fixture
from hwdesign.status import arcs_status, hwp_status
from hwdesign.verify import check_alignment, check_certificate

from corpus import MUTATIONS, small_corpus
from oracle import brute_force_valid
from status_table import ARCS_TABLE, HWP_TABLE


@pytest.fixture
def report(capsys):
    def emit(n: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
        assert ok, detail
    return emit


def _cli_arcs(k: int, t: int, path) -> tuple[int, object]:
    code = main(["build", "arcs", "--k", str(k), "--t", str(t), "-o", str(path)])
    return code, (certfile.read(path) if code == 0 else None)


def _arcs_shape_ok(cert, k: int, t: int) -> bool:
    kinds = Counter(c.kind for c in cert.classes)
    half = [c for c in cert.classes if c.kind == "half_parallel"]
    return (kinds["almost_parallel"] == k * t and len(half) == 1 and len(half[0].cycles) == t
            and check_certificate(cert).ok)


def test_criterion_1_arcs_2k1_sweep(tmp_path, report):
    start, bad = time.perf_counter(), []
    for k in range(9, 50, 2):
        code, cert = _cli_arcs(k, 1, tmp_path / f"a{k}.cert")
        if code != 0 or not _arcs_shape_ok(cert, k, 1):
            bad.append(k)
    took = time.perf_counter() - start
    report(1, not bad and took < 10, f"k-ARCS(2k+1), k=9..49 odd: failures {bad}, {took:.2f}s")


def test_criterion_2_arcs_6k1_sweep(tmp_path, report):
    start, bad, branches = time.perf_counter(), [], {}
    for k in range(9, 32, 2):
        code, cert = _cli_arcs(k, 3, tmp_path / f"b{k}.cert")
        if code != 0 or not _arcs_shape_ok(cert, k, 3):
            bad.append(k)
        else:
            branches[k] = cert.provenance.get("subcase", "")
    took = time.perf_counter() - start
    branches[33] = arcs.build_arcs(33, 3).provenance.get("subcase", "")
    specials = all(branches.get(k, "").startswith("special") for k in (9, 11, 13, 15, 17, 19))
    mod12 = {branches.get(k, "").split(",")[0] for k in (21, 23, 25, 27, 29, 31, 33)}
    mod8 = {k for k in (23, 27, 31) if "mod 8" in branches.get(k, "")}
    covered = specials and len(mod12) == 6 and mod8 == {23, 27, 31}
    report(2, not bad and covered and took < 30,
           f"k-ARCS(6k+1), k=9..31 odd: failures {bad}, {len(set(branches.values()))} branches, {took:.2f}s")


PROFILES = {"L4.1": (3, 11, 6, 5), "L4.2": (3, 13, 8, 5), "L4.3": (3, 15, 8, 7), "L4.5": (3, 11, 6, 10),
            "L4.6": (5, 7, 9, 8), "L4.7": (3, 13, 8, 11), "L3.11": (17, 35, 28, 6)}


def test_criterion_3_fixtures(report):
    start, bad = time.perf_counter(), []
    for name, (m, n, a, b) in PROFILES.items():
        cert = fixture(name)
        if not check_certificate(cert).ok or cert.hw_counts(m, n) != (a, b):
            bad.append(name)
    took = time.perf_counter() - start
    report(3, not bad and set(PROFILES) == set(FIXTURES) and took < 5,
           f"{len(PROFILES)} stored designs: failures {bad}, {took:.2f}s")


def test_criterion_4_column_host(report):
    base = arcs.build_arcs(9, 1)
    start = time.perf_counter()
    cert = cayley.construction_00(base)
    rep = check_certificate(cert)
    took = time.perf_counter() - start
    edges = sum(len(c.cycles) * c.k for c in cert.classes)
    ok = rep.ok and cert.profile == {"C9": 10} and edges == 1710 and took < 2
    report(4, ok, f"Cay(Z_9 x Z_19): profile {cert.profile}, {edges} edges, {took:.2f}s")


def test_criterion_5_frame_filling(tmp_path, report):
    assert search.load_cached("frame", k=5, g=10, u=4) is not None, "frame cache missing"
    start = time.perf_counter()
    code, cert = _cli_arcs(5, 4, tmp_path / "a41.cert")
    took = time.perf_counter() - start
    ok = code == 0 and _arcs_shape_ok(cert, 5, 4) and check_alignment(cert) and took < 2
    report(5, ok, f"5-ARCS(41) from the stored (5,1)-CF(10^4): aligned={ok and check_alignment(cert)}, {took:.2f}s")


def test_criterion_6_lex_cycle_factorizations(report):
    start, bad = time.perf_counter(), []
    for m, n in ((3, 9), (5, 9), (3, 15)):
        cert = cayley.lemma_cmn_two(m, n)
        if not check_certificate(cert).ok or cert.hw_counts(m, n) != (2, n - 2):
            bad.append(("two", m, n))
    for m in (5, 7):
        cert = cayley.lemma_cm9(m)
        if not check_certificate(cert).ok or cert.hw_counts(m, 9) != (4, 5):
            bad.append(("four", m))
    took = time.perf_counter() - start
    report(6, not bad and took < 30, f"C_m[n] factorizations: failures {bad}, {took:.2f}s")


def test_criterion_7_oracle_agreement(report):
    rng = random.Random(7)
    items = small_corpus()
    cases = [(name, c) for name, c in items]
    cases += [(f"{name} / {mut.__name__}", mut(c, rng)) for name, c in items for mut in MUTATIONS]
    disagree = [name for name, c in cases if check_certificate(c).ok != brute_force_valid(c)]
    report(7, not disagree and len(items) >= 10,
           f"{len(cases)} certificates ({len(items)} valid originals): disagreements {disagree}")


def test_criterion_8_mutation_soundness(report):
    rng = random.Random(2024)
    names = sorted(FIXTURES)
    missed = []
    for i in range(200):
        name = rng.choice(names)
        mut = MUTATIONS[i % len(MUTATIONS)]
        rep = check_certificate(mut(fixture(name), rng))
        if rep.ok or not all(w is not None for _, w in rep.violations):
            missed.append((i, name, mut.__name__))
    report(8, not missed, f"200 single-edit mutants of stored designs: unflagged {missed}")


def test_criterion_9_status_oracle(report):
    wrong = [t for t, (cls, frag) in HWP_TABLE.items()
             if hwp_status(*t).classification != cls or frag not in hwp_status(*t).detail]
    wrong += [k for k, cls in ARCS_TABLE.items() if arcs_status(*k).classification != cls]
    report(9, not wrong and len(HWP_TABLE) >= 50,
           f"{len(HWP_TABLE)} HW tuples + {len(ARCS_TABLE)} ARCS orders: mismatches {wrong}")


# ---------------------------------------------------------------------------
# criterion 10: composition identities over a pool of (3, 9) ingredients

OUTERS = {"K_3": lambda: compose.hamilton(3), "KTS(9)": lambda: compose.resolvable(3, 9),
          "K_9 Hamilton": lambda: compose.hamilton(9)}
FILLS = {3: [lambda: compose.cm_factorization(3, 9), lambda: cayley.lemma_cmn_two(3, 9)],
         9: [lambda: compose.cm_factorization(9, 9)]}
INNERS = [lambda: compose.resolvable(3, 9), lambda: compose.hamilton(9)]
_failures: list[str] = []


@st.composite
def blow_up_inputs(draw):
    name = draw(st.sampled_from(sorted(OUTERS)))
    outer = OUTERS[name]()
    fills = [draw(st.sampled_from(FILLS[c.k]))() for c in outer.classes]
    inner = draw(st.sampled_from(INNERS))()
    return name, outer, fills, inner


@settings(max_examples=30, deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow])
@given(blow_up_inputs())
def _check_identities(case):
    name, outer, fills, inner = case
    blown = compose.l351(outer, fills, 3, 9)
    a, b = blown.hw_counts(3, 9)
    fa = sum(f.hw_counts(3, 9)[0] for f in fills)
    ok = check_certificate(blown).ok and a + b == len(outer.classes) * 9 and a == fa
    full = compose.c_rgdd(blown, inner, 3, 9)
    added = Counter(blown.profile) + Counter(inner.profile)
    ok = ok and check_certificate(full).ok and Counter(full.profile) == added
    if not ok:
        _failures.append(name)
    assert ok


def test_criterion_10_composition_identities(report):
    _failures.clear()
    try:
        _check_identities()
        ok = True
    except AssertionError:
        ok = False
    report(10, ok and not _failures, f"randomized blow-up and group filling: failing outers {_failures}")
