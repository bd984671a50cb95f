"""Edge scores, the exact 5-cycle count, and the derived bounds.

Every arc u -> v of an n-tournament classifies the remaining n-2 vertices w
into four groups:

  a: u -> w and v -> w   (common out-neighbor)
  b: w -> u and w -> v   (common in-neighbor)
  c: u -> w and w -> v   (two-step path alongside the arc)
  d: w -> u and v -> w   (w closes a 3-cycle through the arc)

so a + b + c + d = n - 2 and, writing od/id for out-/in-degree,

  od(u) = 1 + a + c      id(u) = b + d
  od(v) = a + d          id(v) = 1 + b + c

The exact number of directed 5-cycles satisfies, over the integers,

  8 * c5 = 6*C(n,5) - sum_arcs[(c+d)(a-b)^2 + (a+b)(c-d)^2]
                    + 2 * sum_arcs[(a+b)(c+d)]

(the two arc sums are called s1 and s2 here).  Everything in this module is
exact: counts are ints, bounds are fractions.Fraction, no floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterator, NamedTuple

from . import kernels
from .core import Tournament
from .errors import BadParameter, BadVertex, NotAnArc

__all__ = [
    "EdgeScore",
    "C5Breakdown",
    "edge_score",
    "edge_scores_iter",
    "c5_exact",
    "c3_closed",
    "upper_bound_c5",
    "lower_bound_c5",
    "score_variance",
    "subtracted_sum_chain",
    "max_c3",
    "max_c4",
    "expected_c5",
]


class EdgeScore(NamedTuple):
    a: int
    b: int
    c: int
    d: int


class C5Breakdown(NamedTuple):
    base: Fraction  # (3/4) * C(n,5)
    s1: int  # sum_arcs (c+d)(a-b)^2 + (a+b)(c-d)^2
    s2: int  # sum_arcs (a+b)(c+d)
    c5: int  # exact directed 5-cycle count


def _score_bits(rows, n: int, u: int, v: int) -> EdgeScore:
    ru = rows[u]
    rv = rows[v]
    a = (ru & rv).bit_count()
    c = (ru & ~rv).bit_count() - 1  # v itself sits in row u but not row v
    d = (rv & ~ru).bit_count()
    return EdgeScore(a, n - 2 - a - c - d, c, d)


def edge_score(t: Tournament, u: int, v: int) -> EdgeScore:
    """Score 4-tuple of the arc u -> v."""
    n = t.n
    if not (0 <= u < n and 0 <= v < n):
        raise BadVertex(f"vertex out of range for n={n}: ({u},{v})")
    if u == v or not t.beats(u, v):
        raise NotAnArc(f"({u},{v}) is not an arc")
    return _score_bits(t.rows, n, u, v)


def edge_scores_iter(t: Tournament) -> Iterator[tuple[tuple[int, int], EdgeScore]]:
    """Yield ((u, v), score) for every arc u -> v."""
    rows = t.rows
    n = t.n
    for u in range(n):
        rest = rows[u]
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            yield (u, v), _score_bits(rows, n, u, v)


def c5_exact(t: Tournament) -> C5Breakdown:
    """Exact directed 5-cycle count from the arc scores, in O(n^3) bit ops.

    All arithmetic is integral; the 8-divisibility of the combination is an
    identity, so a remainder means the input rows were not a tournament.
    """
    n = t.n
    s1, s2 = kernels.edge_sums(t.rows, n)
    numerator = 6 * comb(n, 5) - s1 + 2 * s2
    c5, rem = divmod(numerator, 8)
    if rem:
        raise ArithmeticError(
            f"5-cycle combination {numerator} not divisible by 8; invalid rows?"
        )
    return C5Breakdown(base=Fraction(3 * comb(n, 5), 4), s1=s1, s2=s2, c5=c5)


def c3_closed(t: Tournament) -> int:
    """Directed 3-cycles via the out-degree identity
    c3 = C(n,3) - sum_v C(od(v), 2); also equals (sum_arcs d) / 3."""
    return comb(t.n, 3) - sum(comb(od, 2) for od in t.out_degrees())


def upper_bound_c5(n: int) -> Fraction:
    """(3/4)*C(n,5) + (1/4)*C(n,2)*((n-2)/2)^2; valid for every n-tournament
    because each arc has (a+b)(c+d) <= ((n-2)/2)^2."""
    if n < 0:
        raise BadParameter(f"negative n: {n}")
    return Fraction(3 * comb(n, 5), 4) + Fraction(comb(n, 2) * (n - 2) ** 2, 16)


def score_variance(t: Tournament) -> Fraction:
    """sum_v (od(v) - (n-1)/2)^2, exactly; zero iff the tournament is regular."""
    n = t.n
    return Fraction(sum((2 * od - (n - 1)) ** 2 for od in t.out_degrees()), 4)


def lower_bound_c5(t: Tournament) -> Fraction:
    """(3/4)*C(n,5) - (1/2)*C(n-2,2)*score_variance - (3/8)*C(n,3).

    Note the minus sign on the last term: bounding the subtracted arc sum by
    4*C(n-2,2)*score_variance + 3*C(n,3) and scaling by -1/8 subtracts
    (3/8)*C(n,3).  A plus sign there is not a lower bound at all: the regular
    5-tournament has 2 five-cycles, but the plus variant evaluates to 4.5.
    """
    n = t.n
    return (
        Fraction(3 * comb(n, 5), 4)
        - Fraction(comb(max(n - 2, 0), 2), 2) * score_variance(t)
        - Fraction(3 * comb(n, 3), 8)
    )


def subtracted_sum_chain(t: Tournament) -> tuple[int, int, Fraction]:
    """The three stages bounding the subtracted arc sum:

      s1   = sum_arcs (c+d)(a-b)^2 + (a+b)(c-d)^2
      mid  = (n-2) * sum_arcs [(od(v)-id(u))^2 + (od(u)-od(v)-1)^2]
      vertexform = 4*C(n-2,2)*score_variance + 3*C(n,3)

    with s1 <= mid (each factor c+d, a+b is at most n-2, and
    a-b = od(v)-id(u), c-d = od(u)-od(v)-1) and mid = vertexform exactly
    (translating the arc sum to a vertex sum: v appears as a terminus id(v)
    times, as a source od(v) times).
    """
    n = t.n
    od = t.out_degrees()
    edge_sum = 0
    for u, row in enumerate(t.rows):
        id_u = n - 1 - od[u]
        rest = row
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            edge_sum += (od[v] - id_u) ** 2 + (od[u] - od[v] - 1) ** 2
    mid = (n - 2) * edge_sum
    vertexform = 4 * comb(max(n - 2, 0), 2) * score_variance(t) + 3 * comb(n, 3)
    s1, _ = kernels.edge_sums(t.rows, n)
    return s1, mid, vertexform


def max_c3(n: int) -> Fraction:
    """Largest possible 3-cycle count in an n-tournament:
    n(n+1)(n-1)/24 for odd n, n(n+2)(n-2)/24 for even n."""
    if n < 0:
        raise BadParameter(f"negative n: {n}")
    if n % 2 == 1:
        return Fraction(n * (n + 1) * (n - 1), 24)
    return Fraction(n * (n + 2) * (n - 2), 24)


def max_c4(n: int) -> Fraction:
    """Largest possible 4-cycle count in an n-tournament:
    n(n+1)(n-1)(n-3)/48 for odd n, n(n+2)(n-2)(n-3)/48 for even n."""
    if n < 0:
        raise BadParameter(f"negative n: {n}")
    if n % 2 == 1:
        return Fraction(n * (n + 1) * (n - 1) * (n - 3), 48)
    return Fraction(n * (n + 2) * (n - 2) * (n - 3), 48)


def expected_c5(n: int) -> Fraction:
    """Mean 5-cycle count over uniformly random n-tournaments: (3/4)*C(n,5)."""
    if n < 0:
        raise BadParameter(f"negative n: {n}")
    return Fraction(3 * comb(n, 5), 4)
