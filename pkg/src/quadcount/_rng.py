"""Deterministic random generator for reproducible test instances.

SplitMix64 is used everywhere a seeded stream is needed: it is a frozen,
dependency-free scheme, so any other implementation can regenerate the
exact same permutations and graphs from the same 64-bit seed.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1


class SplitMix64:
    """64-bit SplitMix generator (Steele, Lea, Flood constants)."""

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return (z ^ (z >> 31)) & MASK64

    def below(self, bound: int) -> int:
        """Uniform-ish integer in [0, bound). bound >= 1.

        Plain modulo: the bias is irrelevant for test-instance generation
        and keeps the scheme trivially portable.
        """
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def chance(self, num: int, den: int) -> bool:
        """True with probability num/den (exact integer threshold)."""
        return self.next_u64() * den < num * (MASK64 + 1)

    def permutation(self, n: int) -> list[int]:
        """Fisher-Yates shuffle of 1..n using this stream."""
        vals = list(range(1, n + 1))
        for i in range(n - 1, 0, -1):
            j = self.below(i + 1)
            vals[i], vals[j] = vals[j], vals[i]
        return vals
