"""Tournament representation, validated constructors and text interchange.

A tournament on n vertices orients every unordered pair {u, v} exactly one
way.  Vertices are dense 0-based integers.  Orientations are stored as one
out-neighbor bitmask per vertex (bit v of row u set iff u -> v), which makes
"does u beat v" a single bit test and set algebra on neighborhoods a few
machine-word operations via Python's big-int popcounts.

The practical size cap is n <= 4096 (rows are O(n^2) bits); nothing enforces
it, but all the counting routines here are meant for desk-scale instances.

Text format (see parse/serialize): ``<n>:<bits>`` where <bits> holds exactly
n*(n-1)/2 characters in {0,1}, one per pair (i, j) with i < j in lexicographic
order, '1' meaning i -> j.  Lines starting with '#' are comments; whitespace
around the record is ignored.  Files are UTF-8 with LF line endings.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from ._rng import SplitMix64
from .errors import (
    BadFormat,
    BadParameter,
    BadPermutation,
    BadVertex,
    ConflictingArc,
    IncompleteTournament,
    LengthMismatch,
    NotATournament,
)

__all__ = [
    "Tournament",
    "from_arcs",
    "parse",
    "serialize",
    "random_tournament",
    "transitive",
    "circulant",
    "quadratic_residue",
    "reverse",
    "relabel",
    "validate",
]


class Tournament:
    """Immutable complete directed graph on vertices 0..n-1."""

    __slots__ = ("n", "_rows")

    def __init__(self, n: int, rows: Sequence[int]):
        # Trusted constructor: rows must already describe a tournament.
        # Public constructors below validate their inputs; `validate` checks
        # the invariant explicitly for anything of unknown provenance.
        self.n = n
        self._rows = tuple(rows)

    @property
    def rows(self) -> tuple[int, ...]:
        """Out-neighbor bitmask per vertex."""
        return self._rows

    def beats(self, u: int, v: int) -> bool:
        return (self._rows[u] >> v) & 1 == 1

    def out_degree(self, u: int) -> int:
        return self._rows[u].bit_count()

    def in_degree(self, u: int) -> int:
        return self.n - 1 - self._rows[u].bit_count()

    def out_degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def out_neighbors(self, u: int) -> list[int]:
        return _bits_to_list(self._rows[u])

    def arcs(self) -> Iterator[tuple[int, int]]:
        """All ordered arcs (u, v) with u -> v."""
        for u, row in enumerate(self._rows):
            for v in _bits_to_list(row):
                yield (u, v)

    def induced(self, vertices: Iterable[int]) -> "Tournament":
        """Subtournament on the given vertices, relabeled 0..k-1 in sorted order."""
        verts = sorted(set(vertices))
        if verts and not (0 <= verts[0] and verts[-1] < self.n):
            raise BadVertex(f"vertices out of range for n={self.n}: {verts}")
        k = len(verts)
        rows = [0] * k
        for i, u in enumerate(verts):
            row_u = self._rows[u]
            for j, v in enumerate(verts):
                if (row_u >> v) & 1:
                    rows[i] |= 1 << j
        return Tournament(k, rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tournament):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.n, self._rows))

    def __repr__(self) -> str:
        if self.n <= 8:
            return f"Tournament({serialize(self)!r})"
        return f"Tournament(n={self.n})"


def _bits_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def pair_order(n: int) -> Iterator[tuple[int, int]]:
    """Unordered pairs (i, j), i < j, in the lexicographic order used by the
    text format."""
    for i in range(n):
        for j in range(i + 1, n):
            yield (i, j)


def validate(t: Tournament) -> None:
    """Check completeness and antisymmetry over all pairs.

    Raises NotATournament on any violation; generators and parsers in this
    module produce valid instances by construction, so this is primarily a
    test hook and a guard for hand-built rows.
    """
    n = t.n
    rows = t.rows
    if len(rows) != n:
        raise NotATournament(f"expected {n} rows, got {len(rows)}")
    full = (1 << n) - 1
    for u, row in enumerate(rows):
        if row & ~full:
            raise NotATournament(f"row {u} has bits outside 0..{n - 1}")
        if (row >> u) & 1:
            raise NotATournament(f"self-loop at vertex {u}")
    for u in range(n):
        for v in range(u + 1, n):
            forward = (rows[u] >> v) & 1
            backward = (rows[v] >> u) & 1
            if forward == backward:
                kind = "both" if forward else "neither"
                raise NotATournament(f"pair ({u},{v}) oriented {kind} ways")


def from_arcs(n: int, arcs: Iterable[tuple[int, int]]) -> Tournament:
    """Build a tournament from an explicit list of ordered arcs.

    Every unordered pair must appear exactly once (in either orientation).
    """
    if n < 0:
        raise BadParameter(f"vertex count must be non-negative, got {n}")
    rows = [0] * n
    seen = [0] * n  # unordered coverage mask per vertex
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise BadVertex(f"bad arc ({u},{v}) for n={n}")
        if (seen[u] >> v) & 1:
            raise ConflictingArc(f"pair ({min(u, v)},{max(u, v)}) given twice")
        seen[u] |= 1 << v
        seen[v] |= 1 << u
        rows[u] |= 1 << v
    full = (1 << n) - 1
    for u in range(n):
        missing = full & ~seen[u] & ~(1 << u)
        if missing:
            v = (missing & -missing).bit_length() - 1
            raise IncompleteTournament(f"pair ({min(u, v)},{max(u, v)}) has no arc")
    return Tournament(n, rows)


def serialize(t: Tournament) -> str:
    """Canonical one-line text form ``<n>:<bits>``."""
    bits = []
    rows = t.rows
    for i, j in pair_order(t.n):
        bits.append("1" if (rows[i] >> j) & 1 else "0")
    return f"{t.n}:{''.join(bits)}"


def parse(text: str) -> Tournament:
    """Parse the ``<n>:<bits>`` text form; inverse of serialize."""
    records = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        records.append(stripped)
    if len(records) != 1:
        raise BadFormat(f"expected exactly one record, found {len(records)}")
    record = records[0]
    head, sep, bits = record.partition(":")
    if not sep:
        raise BadFormat("missing ':' separator")
    try:
        n = int(head)
    except ValueError:
        raise BadFormat(f"bad vertex count {head!r}") from None
    if n < 0:
        raise BadFormat(f"negative vertex count {n}")
    expected = n * (n - 1) // 2
    if len(bits) != expected:
        raise LengthMismatch(f"n={n} needs {expected} bits, got {len(bits)}")
    rows = [0] * n
    for (i, j), ch in zip(pair_order(n), bits):
        if ch == "1":
            rows[i] |= 1 << j
        elif ch == "0":
            rows[j] |= 1 << i
        else:
            raise BadFormat(f"illegal character {ch!r} in bit string")
    return Tournament(n, rows)


def random_tournament(n: int, p: float, seed: int) -> Tournament:
    """Random tournament: each pair (i, j), i < j, oriented i -> j
    independently with probability p.  Deterministic in the 64-bit seed."""
    if n < 0:
        raise BadParameter(f"vertex count must be non-negative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise BadParameter(f"arc probability must be in [0,1], got {p}")
    gen = SplitMix64(seed)
    rows = [0] * n
    for i, j in pair_order(n):
        if gen.next_unit() < p:
            rows[i] |= 1 << j
        else:
            rows[j] |= 1 << i
    return Tournament(n, rows)


def transitive(n: int) -> Tournament:
    """The acyclic tournament: i -> j iff i < j."""
    if n < 0:
        raise BadParameter(f"vertex count must be non-negative, got {n}")
    full = (1 << n) - 1
    return Tournament(n, [full & ~((1 << (i + 1)) - 1) for i in range(n)])


def circulant(n: int, offsets: Iterable[int]) -> Tournament:
    """Rotational tournament: i -> j iff (j - i) mod n is in offsets.

    Requires exactly one of d, n-d in offsets for every d in 1..n-1, which
    forces n odd.  Every vertex then has out-degree (n-1)/2.
    """
    if n < 0:
        raise BadParameter(f"vertex count must be non-negative, got {n}")
    offs = set(offsets)
    for d in offs:
        if not 1 <= d <= n - 1:
            raise NotATournament(f"offset {d} outside 1..{n - 1}")
    for d in range(1, n):
        if (d in offs) == (n - d in offs):
            raise NotATournament(
                f"offsets must contain exactly one of {d} and {n - d}"
            )
    rows = [0] * n
    for i in range(n):
        for d in offs:
            rows[i] |= 1 << ((i + d) % n)
    return Tournament(n, rows)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def quadratic_residue(q: int) -> Tournament:
    """Quadratic-residue (Paley) tournament on a prime q = 3 (mod 4):
    i -> j iff (j - i) is a nonzero square mod q.

    These are doubly regular, so every arc sees the same score 4-tuple;
    they make the subtracted sum in the 5-cycle formula as small as a
    tournament allows.
    """
    if not _is_prime(q):
        raise BadParameter(f"{q} is not prime")
    if q % 4 != 3:
        raise BadParameter(f"{q} = {q % 4} (mod 4), need 3 (mod 4)")
    residues = {(x * x) % q for x in range(1, q)}
    rows = [0] * q
    for i in range(q):
        for d in residues:
            rows[i] |= 1 << ((i + d) % q)
    return Tournament(q, rows)


def reverse(t: Tournament) -> Tournament:
    """Flip every arc."""
    n = t.n
    full = (1 << n) - 1
    return Tournament(n, [full & ~row & ~(1 << u) for u, row in enumerate(t.rows)])


def relabel(t: Tournament, perm: Sequence[int]) -> Tournament:
    """Apply a vertex permutation: arc (u, v) becomes (perm[u], perm[v])."""
    n = t.n
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise BadPermutation(f"not a bijection on 0..{n - 1}: {list(perm)!r}")
    rows = [0] * n
    for u, row in enumerate(t.rows):
        new_row = 0
        for v in _bits_to_list(row):
            new_row |= 1 << perm[v]
        rows[perm[u]] = new_row
    return Tournament(n, rows)
