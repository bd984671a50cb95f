"""Deterministic pseudo-random number generation.

The generator is SplitMix64 (Steele, Lea & Flood, "Fast splittable
pseudorandom number generators", OOPSLA 2014), chosen because it is a
published algorithm with a trivially portable 64-bit integer recurrence:
the same seed produces the same stream on every platform and build.
"""

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """64-bit SplitMix64 stream.  Same seed, same stream, everywhere."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_unit(self) -> float:
        """Uniform float in [0, 1) with 53 random bits; exact and portable."""
        return (self.next_u64() >> 11) * 2.0**-53

    def next_below(self, bound: int) -> int:
        """Uniform-ish integer in [0, bound); modulo bias is irrelevant here."""
        return self.next_u64() % bound
