"""SplitMix64: the seeded generator behind every random stream in hyperjac.

The algorithm is fixed (Steele, Lea & Flood constants) so that curve and
divisor streams are reproducible from a seed on any platform.  Bounded draws
use rejection sampling on the top of the 64-bit range.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randbelow(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` for ``1 <= n <= 2**64``."""
        if not 1 <= n <= 1 << 64:
            raise ValueError(f"bound out of range: {n}")
        limit = (1 << 64) - (1 << 64) % n
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def randbit(self) -> int:
        return self.next_u64() >> 63

    def fork(self) -> SplitMix64:
        """An independent child stream seeded from this one."""
        return SplitMix64(self.next_u64())


def as_rng(seed_or_rng: int | SplitMix64) -> SplitMix64:
    if isinstance(seed_or_rng, SplitMix64):
        return seed_or_rng
    return SplitMix64(seed_or_rng)
