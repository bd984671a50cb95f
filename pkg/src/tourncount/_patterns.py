"""Induced-subtournament bit patterns and per-pattern lookup tables.

A k-subset s0 < s1 < ... < s(k-1) of a tournament induces a pattern integer
with one bit per pair (si, sj), i < j, in lexicographic pair order; bit 0 is
the first pair and a set bit means si -> sj.  All subset-scanning kernels and
tables in this package share that encoding, so a table indexed by pattern
turns "count X over all k-subsets" into a lookup per subset.

Tables are built once per k by exhausting all 2^(k*(k-1)/2) patterns; this is
only meant for k <= 5 (1024 patterns).
"""

from functools import lru_cache
from itertools import permutations


@lru_cache(maxsize=None)
def pairs(k: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(k) for j in range(i + 1, k))


def beats_matrix(pattern: int, k: int) -> list[list[bool]]:
    """Decode a pattern into a k x k 'row beats column' matrix."""
    beats = [[False] * k for _ in range(k)]
    for idx, (i, j) in enumerate(pairs(k)):
        if (pattern >> idx) & 1:
            beats[i][j] = True
        else:
            beats[j][i] = True
    return beats


def encode_rows(rows, k: int) -> int:
    """Pattern of a k-vertex tournament given as out-neighbor bitmasks."""
    pattern = 0
    for idx, (i, j) in enumerate(pairs(k)):
        if (rows[i] >> j) & 1:
            pattern |= 1 << idx
    return pattern


def relabel_pattern(pattern: int, perm, k: int) -> int:
    """Pattern after sending vertex i to perm[i]."""
    beats = beats_matrix(pattern, k)
    out = 0
    for idx, (i, j) in enumerate(pairs(k)):
        # arc between new labels i, j comes from the old pair mapped onto them
        u = perm.index(i)
        v = perm.index(j)
        if beats[u][v]:
            out |= 1 << idx
    return out


def hamiltonian_cycles(pattern: int, k: int) -> int:
    """Directed Hamiltonian cycles of the pattern's tournament.

    Vertex 0 is fixed as the start, the remaining k-1 vertices are permuted
    and the k closing arcs checked, so every cyclic sequence is counted once.
    """
    beats = beats_matrix(pattern, k)
    count = 0
    for order in permutations(range(1, k)):
        prev = 0
        ok = True
        for nxt in order:
            if not beats[prev][nxt]:
                ok = False
                break
            prev = nxt
        if ok and beats[prev][0]:
            count += 1
    return count


def is_acyclic(pattern: int, k: int) -> bool:
    """A k-tournament is acyclic iff its out-degrees are {0, 1, ..., k-1}."""
    beats = beats_matrix(pattern, k)
    degs = sorted(sum(row) for row in beats)
    return degs == list(range(k))


@lru_cache(maxsize=None)
def hamiltonian_table(k: int) -> tuple[int, ...]:
    nbits = k * (k - 1) // 2
    return tuple(hamiltonian_cycles(p, k) for p in range(1 << nbits))


@lru_cache(maxsize=None)
def acyclic_table(k: int) -> tuple[int, ...]:
    nbits = k * (k - 1) // 2
    return tuple(int(is_acyclic(p, k)) for p in range(1 << nbits))
