"""Pinned deterministic pseudo-randomness.

Reproducibility across platforms and library versions is a hard requirement
for the randomized campaigns, so the generator is spelled out here instead of
delegating to ``random`` or numpy:

* stream seeding: SplitMix64 (Steele-Lea-Flood finalizer),
* raw 64-bit words: xoshiro256** (Blackman-Vigna),
* bounded draws: masked rejection on the top bits of the next word.

Identical seeds give identical streams everywhere, forever.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """64-bit state-increment generator; also used to derive per-trial seeds."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


class Xoshiro256StarStar:
    """xoshiro256** seeded from a single 64-bit value via SplitMix64."""

    def __init__(self, seed: int):
        sm = SplitMix64(seed)
        self.s = [sm.next() for _ in range(4)]
        if not any(self.s):  # all-zero state is the one forbidden state
            self.s[0] = 1

    def next(self) -> int:
        s0, s1, s2, s3 = self.s
        result = (_rotl((s1 * 5) & _MASK64, 7) * 9) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self.s = [s0, s1, s2, s3]
        return result

    def below(self, bound: int) -> int:
        """Uniform draw in [0, bound) by rejection on the top bits.

        One word is consumed per attempt even when bound == 1, which keeps
        draw positions in the stream independent of earlier outcomes.
        """
        if bound <= 0:
            raise ValueError("bound must be positive")
        k = (bound - 1).bit_length()
        while True:
            word = self.next()
            candidate = word >> (64 - k) if k else 0
            if candidate < bound:
                return candidate


def trial_seeds(master_seed: int, count: int) -> list[int]:
    """Per-trial sub-seeds for a campaign, derived with SplitMix64."""
    sm = SplitMix64(master_seed)
    return [sm.next() for _ in range(count)]
