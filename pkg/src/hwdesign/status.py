"""Existence status of HW(v; m, n; alpha, beta) from the known theorem tables."""

from __future__ import annotations

from dataclasses import dataclass

from .compose import arcs_beta_set
from .errors import NecessaryFail
from .search import resolvable_conditions

SOLVABLE = "SOLVABLE"
NECESSARY_FAIL = "NECESSARY_FAIL"
OPEN = "OPEN"

FIXTURE_TUPLES = {
    (33, 3, 11, 6, 10): "L4.5",
    (35, 5, 7, 9, 8): "L4.6",
    (39, 3, 13, 8, 11): "L4.7",
}

@dataclass(frozen=True)
class HwpStatus:
    classification: str
    detail: str
    citation: str = ""

    def line(self) -> str:
        text = f"{self.classification}({self.detail})"
        return f"{text} [{self.citation}]" if self.citation else text


def _fail(reason: str, citation: str = "necessary conditions") -> HwpStatus:
    return HwpStatus(NECESSARY_FAIL, reason, citation)


def necessary_failure(v: int, m: int, n: int, alpha: int, beta: int) -> str | None:
    """The violated necessary condition, or None."""
    if v < 1 or alpha < 0 or beta < 0:
        return "v >= 1 and alpha, beta >= 0 required"
    if m < 3 or n < 3:
        return "cycle lengths must be at least 3"
    if alpha > 0 and v % m:
        return f"{m} does not divide {v}"
    if beta > 0 and v % n:
        return f"{n} does not divide {v}"
    if alpha + beta != (v - 1) // 2:
        return f"alpha + beta = {alpha + beta} != floor((v-1)/2) = {(v - 1) // 2}"
    return None


def _uniform_status(v: int, k: int) -> HwpStatus:
    """All factors of one length: a C_k-factorization of K_v or of K_{v/2}[2]."""
    u, g = (v, 1) if v % 2 else (v // 2, 2)
    try:
        resolvable_conditions(k, u, g)
    except NecessaryFail as exc:
        return _fail(str(exc), exc.citation or "Theorem 1.1")
    return HwpStatus(SOLVABLE, "Theorem1.1", "Theorem 1.1")


def _problem_bucket(k: int, t: int, beta: int) -> bool:
    """Is (k, 2kt+1, beta) listed among the open cases for m = k, n = 2kt+1?"""
    small = {1, 2, 3, 5, 7}
    if t == 1:
        if k == 5:
            return beta in {1, 2, 3}
        if k == 7:
            return beta in {1, 2, 3, 5}
        return k >= 9 and beta in small
    if t == 2:
        if k == 3 or k >= 11:
            return beta in set(range(1, 2 * k)) | {2 * k + 1, 2 * k + 3}
        return beta in small
    if k == 3:
        top = 3 * t - 2 if t % 2 else 3 * t + 3
        return beta in set(range(1, top + 1, 2)) | {2, 9 * t - 3, 9 * t - 1}
    return beta in small


def _odd_theorem_exception(m: int, n: int, t: int, alpha: int, beta: int) -> bool:
    if t > 1:
        return beta in (1, 3)
    band = set(range(1, (n - 3) // 2 + 1)) | {(n + 1) // 2, (n + 5) // 2}
    return beta in band or (m == 3 and alpha in (2, 4))


def _lemma_recipe(v: int, m: int, n: int, alpha: int, beta: int) -> str | None:
    if n == 9 and m in (5, 7) and v == 9 * m and beta in (9, 11):
        return "Lemma4.8"
    if (m, n) == (3, 13) and beta == 5 and v % 39 == 0 and (v // 39) % 2 == 1 and v > 39:
        return "Lemma4.9"
    if n == 9 and m in (5, 7) and beta == m and v % (9 * m) == 0:
        t = v // (9 * m)
        if t % 2 == 1 and t > 1:
            return "Lemma4.10"
    return None


def hwp_status(v: int, m: int, n: int, alpha: int, beta: int) -> HwpStatus:
    """Classify a Hamilton-Waterloo tuple as SOLVABLE, NECESSARY_FAIL or OPEN."""
    if m > n:
        m, n, alpha, beta = n, m, beta, alpha
    reason = necessary_failure(v, m, n, alpha, beta)
    if reason:
        return _fail(reason)
    if alpha + beta == 0:
        return HwpStatus(SOLVABLE, "empty factorization", "trivial")
    if m == n:
        return _uniform_status(v, m)
    if beta == 0:
        return _uniform_status(v, m)
    if alpha == 0:
        return _uniform_status(v, n)

    name = FIXTURE_TUPLES.get((v, m, n, alpha, beta))
    if name:
        return HwpStatus(SOLVABLE, f"fixture {name}", f"Lemma {name[1:]}")
    recipe = _lemma_recipe(v, m, n, alpha, beta)
    if recipe:
        return HwpStatus(SOLVABLE, recipe, f"Lemma {recipe[5:]}")

    k = m
    weighted = k % 2 == 1 and (n - 1) % (2 * k) == 0 and v == k * n
    t_w = (n - 1) // (2 * k) if weighted else 0
    if weighted and t_w >= 1 and beta in arcs_beta_set(k, t_w):
        return HwpStatus(SOLVABLE, "Theorem1.4", "Theorem 1.4")

    if m % 4 == 0 and n % m == 0 and n // m >= 2 and v % n == 0:
        return HwpStatus(SOLVABLE, "Theorem1.5", "Theorem 1.5")

    if m % 2 == 1 and n % 2 == 1 and v % (m * n) == 0:
        t = v // (m * n)
        tags, sources = [], []
        if _odd_theorem_exception(m, n, t, alpha, beta):
            tags.append("Theorem 1.3 exception")
            sources.append("Theorem 1.3")
        if weighted and _problem_bucket(k, t_w, beta):
            tags.append(f"Problem 5.1 (k={k}, t={t_w})")
            sources.append("Problem 5.1")
        if tags:
            return HwpStatus(OPEN, " / ".join(tags), ", ".join(sources))
        return HwpStatus(SOLVABLE, "Theorem1.3", "Theorem 1.3")
    return HwpStatus(OPEN, "not covered by the implemented tables", "")


@dataclass(frozen=True)
class ArcsStatus:
    classification: str  # EXISTS, NONEXISTENT or OPEN
    citation: str

    def line(self) -> str:
        return f"{self.classification} ({self.citation})"


ARCS_SMALL_K = {3, 4, 5, 6, 7, 8, 9, 10, 14}


def arcs_status(k: int, t: int) -> ArcsStatus:
    """Known existence of a k-ARCS(2kt+1)."""
    n = 2 * k * t + 1
    if k < 3 or t < 1:
        return ArcsStatus("NONEXISTENT", "needs k >= 3, t >= 1")
    if k in ARCS_SMALL_K:
        if (k, n) in {(3, 7), (3, 13), (4, 9)}:
            return ArcsStatus("NONEXISTENT", "Theorem 1.2 exception")
        if (k, n) in {(8, 33), (14, 57)}:
            return ArcsStatus("OPEN", "Theorem 1.2 possible exception")
        return ArcsStatus("EXISTS", "Theorem 1.2")
    if k % 2 == 1:
        if t == 2:
            return ArcsStatus("OPEN", "t = 2 not covered for odd k >= 11")
        return ArcsStatus("EXISTS", "odd k >= 11, t != 2")
    return ArcsStatus("OPEN", "even k outside the known table")
