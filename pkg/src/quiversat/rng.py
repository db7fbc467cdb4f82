"""SplitMix64, the portable generator behind every sampled representation.

State advance and output mixing follow the reference SplitMix64:

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output z ^ (z >> 31)

The initial state is the user seed.  Bounded integers use rejection sampling
(no modulo bias): for a range of size m, outputs x >= 2^64 - (2^64 mod m)
are discarded and the rest reduced mod m.
"""
from __future__ import annotations

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int = 0):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        """Uniform integer in ``[0, m)``."""
        if m <= 0:
            raise ValueError("range must be positive")
        limit = (1 << 64) - ((1 << 64) % m)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % m

    def symmetric(self, bound: int) -> int:
        """Uniform integer in ``[-bound, bound]``."""
        return self.below(2 * bound + 1) - bound
