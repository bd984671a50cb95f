"""Tournament construction, validation and the text format."""

import pytest
from hypothesis import given, strategies as st

from tourncount import (
    BadFormat,
    BadPermutation,
    BadParameter,
    BadVertex,
    ConflictingArc,
    IncompleteTournament,
    LengthMismatch,
    NotATournament,
    circulant,
    from_arcs,
    parse,
    quadratic_residue,
    random_tournament,
    relabel,
    reverse,
    serialize,
    transitive,
    validate,
)
from tourncount.census import count_k_cycles_bruteforce

from helpers import tournament_from_bits


@st.composite
def tournaments(draw, max_n=16):
    n = draw(st.integers(min_value=0, max_value=max_n))
    nbits = n * (n - 1) // 2
    bits = draw(st.integers(min_value=0, max_value=(1 << nbits) - 1))
    return tournament_from_bits(n, bits)


class TestFromArcs:
    def test_three_cycle(self):
        t = from_arcs(3, [(0, 1), (1, 2), (2, 0)])
        assert t.beats(0, 1) and t.beats(1, 2) and t.beats(2, 0)
        assert count_k_cycles_bruteforce(t, 3) == 1

    def test_conflicting_arc(self):
        with pytest.raises(ConflictingArc):
            from_arcs(3, [(0, 1), (1, 0), (1, 2), (2, 0)])

    def test_two_vertices(self):
        t = from_arcs(2, [(0, 1)])
        assert t.out_degrees() == [1, 0]

    def test_missing_pair(self):
        with pytest.raises(IncompleteTournament):
            from_arcs(3, [(0, 1), (1, 2)])

    def test_out_of_range(self):
        with pytest.raises(BadVertex):
            from_arcs(3, [(0, 3), (0, 1), (1, 2)])
        with pytest.raises(BadVertex):
            from_arcs(3, [(0, 0), (0, 1), (1, 2)])


class TestTextFormat:
    def test_parse_three_cycle(self):
        t = parse("3:101")
        assert t.beats(0, 1) and t.beats(2, 0) and t.beats(1, 2)

    def test_serialize_transitive(self):
        assert serialize(transitive(3)) == "3:111"

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            parse("4:101")

    def test_bad_character(self):
        with pytest.raises(BadFormat):
            parse("3:1x1")

    def test_missing_colon(self):
        with pytest.raises(BadFormat):
            parse("3")

    def test_comments_and_whitespace(self):
        t = parse("# regular tournament on 5 vertices\n\n  5:1100110111  \n")
        assert t == circulant(5, {1, 2})

    def test_two_records_rejected(self):
        with pytest.raises(BadFormat):
            parse("3:101\n3:111")

    def test_empty_tournaments(self):
        assert serialize(transitive(0)) == "0:"
        assert parse("1:").n == 1

    @given(tournaments())
    def test_round_trip(self, t):
        validate(t)
        assert parse(serialize(t)) == t

    def test_round_trip_up_to_64(self):
        for n in (0, 1, 2, 17, 33, 64):
            t = random_tournament(n, 0.37, seed=1000 + n)
            assert parse(serialize(t)) == t

    @given(tournaments())
    def test_degree_sum(self, t):
        n = t.n
        assert sum(t.out_degrees()) == n * (n - 1) // 2
        assert sum(t.in_degree(v) for v in range(n)) == n * (n - 1) // 2


class TestGenerators:
    def test_random_deterministic(self):
        a = random_tournament(10, 0.5, 42)
        b = random_tournament(10, 0.5, 42)
        assert serialize(a) == serialize(b)
        assert serialize(a) != serialize(random_tournament(10, 0.5, 43))

    def test_random_p_one_is_transitive(self):
        assert random_tournament(5, 1.0, 7) == transitive(5)

    def test_random_p_zero_reverses(self):
        assert random_tournament(5, 0.0, 7) == reverse(transitive(5))

    def test_random_empty(self):
        assert random_tournament(0, 0.5, 1).n == 0

    def test_random_bad_p(self):
        with pytest.raises(BadParameter):
            random_tournament(5, 1.5, 0)

    def test_random_validates(self):
        for seed in range(5):
            validate(random_tournament(12, 0.3, seed))

    def test_transitive_degrees(self):
        assert transitive(4).out_degrees() == [3, 2, 1, 0]

    def test_circulant_regular(self):
        t = circulant(5, {1, 2})
        validate(t)
        assert t.out_degrees() == [2] * 5

    def test_circulant_three_cycle(self):
        assert circulant(3, {1}) == from_arcs(3, [(0, 1), (1, 2), (2, 0)])

    def test_circulant_bad_offsets(self):
        with pytest.raises(NotATournament):
            circulant(5, {1, 4})
        with pytest.raises(NotATournament):
            circulant(5, {1})
        with pytest.raises(NotATournament):
            circulant(6, {1, 2, 3})

    def test_quadratic_residue_regular(self):
        t = quadratic_residue(7)
        validate(t)
        assert t.out_degrees() == [3] * 7

    def test_quadratic_residue_bad_parameters(self):
        with pytest.raises(BadParameter):
            quadratic_residue(5)  # 5 = 1 (mod 4)
        with pytest.raises(BadParameter):
            quadratic_residue(9)  # not prime


class TestReverseRelabel:
    def test_reverse_involution(self):
        t = random_tournament(9, 0.5, 11)
        assert reverse(reverse(t)) == t

    def test_reverse_equals_order_reversal(self):
        n = 4
        assert reverse(transitive(n)) == relabel(transitive(n), [n - 1 - i for i in range(n)])

    def test_bad_permutation(self):
        with pytest.raises(BadPermutation):
            relabel(transitive(3), [0, 0, 2])
        with pytest.raises(BadPermutation):
            relabel(transitive(3), [0, 1])

    @given(tournaments(max_n=10), st.randoms())
    def test_relabel_preserves_structure(self, t, rng):
        perm = list(range(t.n))
        rng.shuffle(perm)
        s = relabel(t, perm)
        validate(s)
        assert sorted(s.out_degrees()) == sorted(t.out_degrees())
        for k in (3, 4, 5):
            assert count_k_cycles_bruteforce(s, k) == count_k_cycles_bruteforce(t, k)

    @given(tournaments(max_n=10))
    def test_reverse_preserves_cycles(self, t):
        validate(reverse(t))
        for k in (3, 4, 5):
            assert count_k_cycles_bruteforce(reverse(t), k) == count_k_cycles_bruteforce(t, k)
