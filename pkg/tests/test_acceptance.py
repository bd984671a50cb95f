"""Acceptance suite: one test per shipping criterion, one PASS/FAIL line each.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines.
Every comparison is exact (integers and fractions) unless the criterion
itself is statistical, in which case the stated tolerance is pinned here.
"""

import subprocess
import sys
from contextlib import contextmanager
from fractions import Fraction
from math import comb

from tourncount import (
    build_class_table,
    c5_exact,
    census5,
    circulant,
    count_acyclic,
    count_acyclic_recursive,
    count_k_cycles_bruteforce,
    edge_score,
    edge_scores_iter,
    expected_c5,
    f_lower,
    lower_bound_c5,
    max_c3,
    max_c4,
    quadratic_residue,
    r_quantities,
    recover_matrix,
    subtracted_sum_chain,
    upper_bound_c5,
)
from tourncount._rng import SplitMix64
from tourncount.core import random_tournament

from helpers import seeded_batch, tournament_from_bits


@contextmanager
def criterion(label):
    try:
        yield
    except BaseException:
        print(f"FAIL {label}")
        raise
    print(f"PASS {label}")


def test_criterion_1_formula_equals_bruteforce():
    with criterion("1 five-cycle formula matches brute force on 1000 tournaments"):
        for t in seeded_batch(1000, seed=11, n_lo=5, n_hi=12):
            b = c5_exact(t)
            assert b.c5 == count_k_cycles_bruteforce(t, 5)
            assert 8 * b.c5 == 6 * comb(t.n, 5) - b.s1 + 2 * b.s2


def test_criterion_2_fixed_point_values():
    with criterion("2 fixed points: regular 5-tournament and QR(7)"):
        reg5 = circulant(5, {1, 2})
        assert c5_exact(reg5).c5 == 2
        assert count_k_cycles_bruteforce(reg5, 5) == 2
        assert count_k_cycles_bruteforce(reg5, 4) == 5
        assert count_k_cycles_bruteforce(reg5, 3) == 5
        counts = census5(reg5).counts
        assert sum(counts) == 1
        assert build_class_table().ham_counts[counts.index(1)] == 2

        qr7 = quadratic_residue(7)
        assert c5_exact(qr7).c5 == 42
        assert count_k_cycles_bruteforce(qr7, 5) == 42
        assert all(edge_score(qr7, u, v) == (1, 1, 1, 2) for u, v in qr7.arcs())


def test_criterion_3_degree_identities():
    with criterion("3 per-arc degree identities on 500 tournaments up to n=20"):
        for t in seeded_batch(500, seed=13, n_lo=2, n_hi=20):
            n = t.n
            od = t.out_degrees()
            for (u, v), s in edge_scores_iter(t):
                assert s.a + s.b + s.c + s.d == n - 2
                assert od[u] == 1 + s.a + s.c
                assert n - 1 - od[u] == s.b + s.d
                assert od[v] == s.a + s.d
                assert n - 1 - od[v] == 1 + s.b + s.c


def test_criterion_4_bounds_and_chain():
    with criterion("4 bound sandwich and the subtracted-sum chain"):
        fixed = [
            circulant(5, {1, 2}),
            circulant(7, {1, 2, 3}),
            quadratic_residue(7),
            quadratic_residue(11),
        ]
        for t in fixed + seeded_batch(300, seed=14, n_lo=3, n_hi=14):
            c5 = c5_exact(t).c5
            assert lower_bound_c5(t) <= c5 <= upper_bound_c5(t.n)
            s1, mid, vertexform = subtracted_sum_chain(t)
            assert s1 <= mid
            assert mid == vertexform


def test_criterion_5_census_and_matrix():
    with criterion("5 class table, relation matrix, and census linearity"):
        table = build_class_table()
        assert len(table.reps) == 12
        assert sum(table.sizes) == 1024
        assert sorted(table.ham_counts) == [0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 3]
        m = recover_matrix()
        assert m[12] == (1,) * 12
        assert sorted(m[13]) == [0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 3]
        for j in range(12):
            assert 8 * m[13][j] == (
                -2 * sum(m[i][j] for i in range(8))
                + 2 * sum(m[i][j] for i in range(8, 12))
                + 6 * m[12][j]
            )
        for t in seeded_batch(100, seed=15, n_lo=5, n_hi=10):
            counts = census5(t).counts
            r = r_quantities(t)
            for i in range(14):
                assert r[i] == sum(m[i][j] * counts[j] for j in range(12))


def test_criterion_6_acyclic_counts():
    with criterion("6 acyclic counts: recursion agreement and lower bound"):
        for idx, t in enumerate(seeded_batch(500, seed=16, n_lo=3, n_hi=12)):
            k = 3 + idx % 3
            count = count_acyclic(t, k)
            assert count >= f_lower(t.n, k)
            assert count == count_acyclic_recursive(t, k)
        reg5 = circulant(5, {1, 2})
        assert f_lower(5, 3) == 5
        assert count_acyclic(reg5, 3) == 5
        assert f_lower(3, 3) == 0


def test_criterion_7_asymptotic_flavor():
    with criterion("7 QR ratio decreasing toward 1; Monte-Carlo mean near 189"):
        ratios = []
        for q in (7, 19, 43, 103):
            t = quadratic_residue(q)
            ratios.append(Fraction(c5_exact(t).c5) / expected_c5(q))
        assert all(x > y for x, y in zip(ratios, ratios[1:]))
        assert 1 < ratios[-1] < Fraction(106, 100)

        gen = SplitMix64(2026)
        total = sum(
            c5_exact(random_tournament(10, 0.5, gen.next_u64())).c5
            for _ in range(1000)
        )
        mean = Fraction(total, 1000)
        assert abs(mean - 189) <= Fraction(189 * 2, 100)


def test_criterion_8_reference_maxima_exhaustive():
    with criterion("8 exhaustive 3/4-cycle maxima at n=5 and n=6"):
        best3 = best4 = 0
        for bits in range(1 << 10):
            t = tournament_from_bits(5, bits)
            best3 = max(best3, count_k_cycles_bruteforce(t, 3))
            best4 = max(best4, count_k_cycles_bruteforce(t, 4))
        assert best3 == 5 == max_c3(5)
        assert best4 == 5 == max_c4(5)
        best3 = 0
        for bits in range(1 << 15):
            best3 = max(best3, count_k_cycles_bruteforce(tournament_from_bits(6, bits), 3))
        assert best3 == 8 == max_c3(6)


def test_criterion_9_cli_verify_deterministic():
    with criterion("9 verify CLI: exit 0 twice with byte-identical output"):
        cmd = [
            sys.executable, "-m", "tourncount",
            "verify", "--suite", "all", "--cases", "200", "--seed", "1",
        ]
        first = subprocess.run(cmd, capture_output=True)
        second = subprocess.run(cmd, capture_output=True)
        assert first.returncode == 0
        assert second.returncode == 0
        assert first.stdout == second.stdout
        assert first.stdout.endswith(b"verify: pass\n")
