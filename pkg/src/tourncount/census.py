"""Brute-force cycle oracles and the 5-vertex subtournament census.

There are exactly 12 isomorphism classes of 5-vertex tournaments.  This
module enumerates them, classifies arbitrary 5-vertex inputs by canonical
form, counts how often each class appears among the 5-subsets of a larger
tournament, and evaluates the 14 edge-sum quantities whose per-class values
form a 14 x 12 integer relation matrix.  Row 14 of that matrix (Hamiltonian
5-cycles per class) is what makes the census a 5-cycle counter.

Class order is deterministic but arbitrary: classes are sorted by
(hamiltonian cycle count, canonical bit string) ascending.

The full census costs C(n,5) pattern lookups; practical cap around n <= 100
with the compiled backend (75e6 subsets), much less in pure Python.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import NamedTuple

from . import kernels
from ._patterns import encode_rows, hamiltonian_table, relabel_pattern
from .core import Tournament, serialize
from .errors import WrongOrder
from .scores import c5_exact, edge_scores_iter

__all__ = [
    "ClassTable",
    "Census5",
    "count_k_cycles_bruteforce",
    "classify5",
    "build_class_table",
    "census5",
    "r_quantities",
    "recover_matrix",
]

NUM_CLASSES = 12


@dataclass(frozen=True)
class ClassTable:
    """The 12 isomorphism classes of 5-vertex tournaments."""

    reps: tuple[Tournament, ...]  # canonical representative per class
    canon_index: dict[str, int]  # canonical serialization -> class index
    ham_counts: tuple[int, ...]  # Hamiltonian 5-cycles per class
    class_of_pattern: tuple[int, ...]  # class index per 10-bit pattern
    sizes: tuple[int, ...]  # labeled tournaments per class


class Census5(NamedTuple):
    """counts[j] = number of 5-subsets inducing class j; sums to C(n,5)."""

    counts: tuple[int, ...]


def _pattern_orbit(pattern: int) -> set[int]:
    return {relabel_pattern(pattern, perm, 5) for perm in permutations(range(5))}


def _bits_string(pattern: int, nbits: int) -> str:
    return "".join("1" if (pattern >> i) & 1 else "0" for i in range(nbits))


def _canonical_pattern(orbit: set[int]) -> int:
    # Lexicographically minimal bit serialization; bit 0 is the first pair,
    # so compare the bit strings rather than the raw integers.
    return min(orbit, key=lambda p: _bits_string(p, 10))


@lru_cache(maxsize=1)
def build_class_table() -> ClassTable:
    """Partition all 1024 labeled 5-vertex tournaments into the 12 classes."""
    ham5 = hamiltonian_table(5)
    class_of = [-1] * 1024
    canon_patterns: list[int] = []
    sizes: list[int] = []
    for p in range(1024):
        if class_of[p] != -1:
            continue
        orbit = _pattern_orbit(p)
        idx = len(canon_patterns)
        canon_patterns.append(_canonical_pattern(orbit))
        sizes.append(len(orbit))
        for q in orbit:
            class_of[q] = idx
    assert len(canon_patterns) == NUM_CLASSES

    # Reorder classes by (hamiltonian count, canonical bits) ascending.
    order = sorted(
        range(NUM_CLASSES),
        key=lambda i: (ham5[canon_patterns[i]], _bits_string(canon_patterns[i], 10)),
    )
    rank = [0] * NUM_CLASSES
    for new, old in enumerate(order):
        rank[old] = new

    reps = []
    canon_index = {}
    ham_counts = []
    for old in order:
        pattern = canon_patterns[old]
        rep = _tournament_from_pattern(pattern)
        reps.append(rep)
        canon_index[serialize(rep)] = len(reps) - 1
        ham_counts.append(ham5[pattern])
    return ClassTable(
        reps=tuple(reps),
        canon_index=canon_index,
        ham_counts=tuple(ham_counts),
        class_of_pattern=tuple(rank[c] for c in class_of),
        sizes=tuple(sizes[old] for old in order),
    )


def _tournament_from_pattern(pattern: int) -> Tournament:
    rows = [0] * 5
    idx = 0
    for i in range(5):
        for j in range(i + 1, 5):
            if (pattern >> idx) & 1:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
            idx += 1
    return Tournament(5, rows)


def classify5(t: Tournament) -> int:
    """Class index of a 5-vertex tournament; equal indices iff isomorphic."""
    if t.n != 5:
        raise WrongOrder(f"classification needs exactly 5 vertices, got {t.n}")
    return build_class_table().class_of_pattern[encode_rows(t.rows, 5)]


def count_k_cycles_bruteforce(t: Tournament, k: int) -> int:
    """Number of directed cycles on exactly k distinct vertices.

    Each k-subset contributes the number of directed Hamiltonian cycles of
    its induced subtournament (rotations identified, so each cyclic sequence
    counts once).  Returns 0 unless 3 <= k <= n.  Subset enumeration makes
    this the independent oracle for the closed-form counters; k in {3,4,5}
    runs through the per-pattern table kernels, other k enumerate
    permutations directly (desk scale only).
    """
    if k < 3 or k > t.n:
        return 0
    if 3 <= k <= 5:
        return kernels.subset_table_sum(t.rows, t.n, k, hamiltonian_table(k))
    return _count_k_cycles_generic(t, k)


def _count_k_cycles_generic(t: Tournament, k: int) -> int:
    """Table-free oracle: per subset, fix the smallest vertex and enumerate
    the (k-1)! vertex orders.  Used to validate the table path in tests."""
    if k < 3 or k > t.n:
        return 0
    rows = t.rows
    total = 0
    for subset in combinations(range(t.n), k):
        first = subset[0]
        for order in permutations(subset[1:]):
            prev = first
            ok = True
            for nxt in order:
                if not (rows[prev] >> nxt) & 1:
                    ok = False
                    break
                prev = nxt
            if ok and (rows[prev] >> first) & 1:
                total += 1
    return total


def census5(t: Tournament) -> Census5:
    """Count, per class, the 5-subsets inducing it; all zeros when n < 5."""
    if t.n < 5:
        return Census5((0,) * NUM_CLASSES)
    table = build_class_table()
    counts = kernels.label_histogram5(
        t.rows, t.n, table.class_of_pattern, NUM_CLASSES
    )
    return Census5(tuple(counts))


def r_quantities(t: Tournament) -> tuple[int, ...]:
    """The 14 census-linear quantities, as a tuple (0-based index i holds
    quantity i+1).

    Entries 1..12 are sums over arcs (u, v) with score (a, b, c, d):
      1: C(a,2)*c   2: C(a,2)*d   3: C(b,2)*c   4: C(b,2)*d
      5: C(c,2)*a   6: C(c,2)*b   7: C(d,2)*a   8: C(d,2)*b
      9: a*b*c     10: a*b*d    11: a*c*d    12: b*c*d
    Entry 13 is C(n,5) and entry 14 the exact 5-cycle count (brute force for
    n <= 12, closed form beyond).  Each of 1..13 counts a configuration on 5
    distinct vertices, which is what makes them linear in the census.
    """
    q = [0] * 12
    for _arc, (a, b, c, d) in edge_scores_iter(t):
        q[0] += comb(a, 2) * c
        q[1] += comb(a, 2) * d
        q[2] += comb(b, 2) * c
        q[3] += comb(b, 2) * d
        q[4] += comb(c, 2) * a
        q[5] += comb(c, 2) * b
        q[6] += comb(d, 2) * a
        q[7] += comb(d, 2) * b
        q[8] += a * b * c
        q[9] += a * b * d
        q[10] += a * c * d
        q[11] += b * c * d
    if t.n <= 12:
        five_cycles = count_k_cycles_bruteforce(t, 5)
    else:
        five_cycles = c5_exact(t).c5
    return tuple(q) + (comb(t.n, 5), five_cycles)


@lru_cache(maxsize=1)
def recover_matrix() -> tuple[tuple[int, ...], ...]:
    """14 x 12 matrix: entry [i][j] is quantity i+1 evaluated on the class-j
    representative.  Row 13 is all ones; row 14 holds the per-class
    Hamiltonian cycle counts; componentwise
      8*row14 = -2*(row1+...+row8) + 2*(row9+...+row12) + 6*row13.
    """
    table = build_class_table()
    columns = [r_quantities(rep) for rep in table.reps]
    return tuple(
        tuple(columns[j][i] for j in range(NUM_CLASSES)) for i in range(14)
    )
