"""Acyclic (transitive) subtournament counting and its closed-form bounds.

Every n-tournament contains at least

  f(n, k) = n (n-1) (n-3) (n-7) ... (n - 2^(k-1) + 1) / 2^C(k,2)

acyclic k-vertex subtournaments when n > 2^(k-1) - 1 (and f = 0 otherwise),
while a uniformly random n-tournament contains

  g(n, k) = n (n-1) ... (n-k+1) / 2^C(k,2)

of them in expectation; f/g -> 1 as n grows with k fixed.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb
from typing import NamedTuple, Union

from . import kernels
from ._patterns import acyclic_table
from .core import Tournament
from .errors import BadParameter

__all__ = [
    "AcyclicBounds",
    "count_acyclic",
    "count_acyclic_recursive",
    "f_lower",
    "g_expected",
    "acyclic_bounds",
]

Rational = Union[int, Fraction]


class AcyclicBounds(NamedTuple):
    f: Fraction  # guaranteed minimum
    g: Fraction  # random-tournament expectation


def count_acyclic(t: Tournament, k: int) -> int:
    """Number of k-subsets inducing an acyclic subtournament (out-degrees
    {0, ..., k-1}); brute force over subsets."""
    if k < 1:
        raise BadParameter(f"subset size must be positive, got {k}")
    n = t.n
    if k > n:
        return 0
    if k == 1:
        return n
    if k == 2:
        return comb(n, 2)
    if k <= 5:
        return kernels.subset_table_sum(t.rows, n, k, acyclic_table(k))
    # Generic subset scan; desk scale only.
    rows = t.rows
    total = 0
    target = list(range(k))
    for subset in combinations(range(n), k):
        degs = sorted(
            sum((rows[u] >> v) & 1 for v in subset) for u in subset
        )
        if degs == target:
            total += 1
    return total


def count_acyclic_recursive(t: Tournament, k: int) -> int:
    """Same count via the source recursion: every acyclic k-set has a unique
    source, so summing the acyclic (k-1)-sets inside each out-neighborhood
    counts each k-set exactly once.  Rebuilds the induced subtournament per
    neighborhood with no memoization; equals count_acyclic exactly.
    """
    if k < 1:
        raise BadParameter(f"subset size must be positive, got {k}")
    if k == 1:
        return t.n
    return sum(
        count_acyclic_recursive(t.induced(t.out_neighbors(v)), k - 1)
        for v in range(t.n)
    )


def f_lower(n: Rational, k: int) -> Fraction:
    """Guaranteed minimum number of acyclic k-subtournaments.

    Defined by the same product for any rational n (the recursion that
    justifies it evaluates the expression at (n-1)/2); integer n is the case
    of record.
    """
    if k < 1:
        raise BadParameter(f"subset size must be positive, got {k}")
    n = Fraction(n)
    if n <= (1 << (k - 1)) - 1:
        return Fraction(0)
    product = Fraction(1)
    for i in range(k):
        product *= n - ((1 << i) - 1)
    return product / (1 << comb(k, 2))


def g_expected(n: Rational, k: int) -> Fraction:
    """Expected number of acyclic k-subtournaments in a random n-tournament."""
    if k < 1:
        raise BadParameter(f"subset size must be positive, got {k}")
    n = Fraction(n)
    product = Fraction(1)
    for i in range(k):
        product *= n - i
    return product / (1 << comb(k, 2))


def acyclic_bounds(n: Rational, k: int) -> AcyclicBounds:
    return AcyclicBounds(f=f_lower(n, k), g=g_expected(n, k))
