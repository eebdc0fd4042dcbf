"""Expected classifications, worked out by hand from the existence tables."""

from __future__ import annotations

NF, SOL, OPEN = "NECESSARY_FAIL", "SOLVABLE", "OPEN"

# (v, m, n, alpha, beta) -> (classification, detail fragment)
HWP_TABLE: dict[tuple[int, int, int, int, int], tuple[str, str]] = {
    (20, 3, 5, 4, 5): (NF, "does not divide"),
    (21, 3, 5, 5, 5): (NF, "does not divide"),
    (15, 3, 5, 3, 3): (NF, "alpha + beta"),
    (35, 5, 7, 10, 8): (NF, "alpha + beta"),
    (18, 4, 6, 4, 4): (NF, "does not divide"),
    (33, 3, 11, 6, 9): (NF, "alpha + beta"),
    (12, 3, 4, 5, 0): (NF, "exception"),
    (6, 3, 5, 2, 0): (NF, ""),
    (9, 3, 5, 4, 0): (SOL, "Theorem1.1"),
    (15, 3, 5, 0, 7): (SOL, "Theorem1.1"),
    (18, 3, 6, 8, 0): (SOL, "Theorem1.1"),
    (12, 3, 6, 0, 5): (SOL, "Theorem1.1"),
    (33, 3, 11, 6, 10): (SOL, "fixture L4.5"),
    (35, 5, 7, 9, 8): (SOL, "fixture L4.6"),
    (39, 3, 13, 8, 11): (SOL, "fixture L4.7"),
    (35, 7, 5, 8, 9): (SOL, "fixture L4.6"),
    (45, 5, 9, 11, 11): (SOL, "Lemma4.8"),
    (45, 5, 9, 13, 9): (SOL, "Lemma4.8"),
    (63, 7, 9, 20, 11): (SOL, "Lemma4.8"),
    (63, 7, 9, 22, 9): (SOL, "Lemma4.8"),
    (117, 3, 13, 53, 5): (SOL, "Lemma4.9"),
    (135, 5, 9, 62, 5): (SOL, "Lemma4.10"),
    (189, 7, 9, 87, 7): (SOL, "Lemma4.10"),
    (405, 5, 9, 197, 5): (SOL, "Lemma4.10"),
    (55, 5, 11, 18, 9): (SOL, "Theorem1.4"),
    (55, 5, 11, 23, 4): (SOL, "Theorem1.4"),
    (57, 3, 19, 18, 10): (SOL, "Theorem1.4"),
    (55, 5, 11, 10, 17): (SOL, "Theorem1.3"),
    (105, 7, 15, 45, 7): (SOL, "Theorem1.3"),
    (39, 3, 13, 13, 6): (SOL, "Theorem1.3"),
    (99, 9, 11, 40, 9): (SOL, "Theorem1.3"),
    (105, 3, 7, 47, 5): (SOL, "Theorem1.3"),
    (135, 3, 9, 65, 2): (SOL, "Theorem1.3"),
    (45, 3, 15, 15, 7): (SOL, "Theorem1.3"),
    (75, 5, 15, 30, 7): (SOL, "Theorem1.3"),
    (33, 3, 11, 7, 9): (SOL, "Theorem1.3"),
    (55, 5, 11, 26, 1): (OPEN, "Problem 5.1"),
    (105, 7, 15, 47, 5): (OPEN, "Problem 5.1"),
    (57, 3, 19, 26, 2): (OPEN, "Problem 5.1"),
    (57, 3, 19, 4, 24): (OPEN, "Theorem 1.3 exception"),
    (21, 3, 7, 9, 1): (OPEN, "Theorem 1.3 exception"),
    (39, 3, 13, 14, 5): (OPEN, "Theorem 1.3 exception"),
    (99, 9, 11, 43, 6): (OPEN, "Theorem 1.3 exception"),
    (105, 3, 7, 51, 1): (OPEN, "Theorem 1.3 exception"),
    (105, 3, 7, 49, 3): (OPEN, "Theorem 1.3 exception"),
    (45, 3, 15, 18, 4): (OPEN, "Theorem 1.3 exception"),
    (45, 5, 9, 21, 1): (OPEN, "Theorem 1.3 exception"),
    (20, 4, 10, 4, 5): (OPEN, "not covered"),
    (16, 4, 8, 3, 4): (SOL, "Theorem1.5"),
    (24, 4, 8, 5, 6): (SOL, "Theorem1.5"),
    (48, 8, 16, 10, 13): (SOL, "Theorem1.5"),
    (24, 4, 12, 5, 6): (SOL, "Theorem1.5"),
}

ARCS_TABLE: dict[tuple[int, int], str] = {
    (3, 1): "NONEXISTENT",
    (3, 2): "NONEXISTENT",
    (4, 1): "NONEXISTENT",
    (8, 2): "OPEN",
    (14, 2): "OPEN",
    (11, 2): "OPEN",
    (9, 1): "EXISTS",
    (11, 3): "EXISTS",
}
