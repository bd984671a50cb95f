"""Shared test utilities: deterministic fuzz corpora."""

from tourncount import Tournament, random_tournament
from tourncount._rng import SplitMix64


def seeded_batch(count, seed, n_lo, n_hi, p=0.5):
    """Deterministic list of random tournaments with n in [n_lo, n_hi]."""
    gen = SplitMix64(seed)
    batch = []
    for _ in range(count):
        case_seed = gen.next_u64()
        n = n_lo + case_seed % (n_hi - n_lo + 1)
        batch.append(random_tournament(n, p, case_seed))
    return batch


def tournament_from_bits(n, bits):
    """Tournament from an integer whose bit i orients the i-th pair (i < j
    lexicographic); used for exhaustive small-n sweeps."""
    rows = [0] * n
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (bits >> idx) & 1:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
            idx += 1
    return Tournament(n, rows)
