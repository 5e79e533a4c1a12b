"""Deterministic random number generation for reproducible experiments.

All randomness in this package flows through SplitMix64, a 64-bit
counter-based generator (Steele, Lea & Flood 2014).  output(i) is a pure
function of ``seed + (i+1) * GAMMA``, so streams can be generated lazily,
in bulk, or split into independent substreams without shared state.  The
same seed yields the same bytes on every platform, which is what makes
edge lists and experiment CSVs byte-reproducible.

Constants (the standard SplitMix64 ones):
    GAMMA = 0x9E3779B97F4A7C15   (odd, 2^64 / golden ratio)
    MIX1  = 0xBF58476D1CE4E5B9
    MIX2  = 0x94D049BB133111EB
"""

from __future__ import annotations

import math

import numpy as np

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB
SPAWN_SALT = 0xA3EC4E93C0A1B2C5


def mix64(z: int) -> int:
    """Finalizer: bijective avalanche mix of a 64-bit word."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    return z ^ (z >> 31)


def spawn_seed(seed: int, index: int) -> int:
    """Derive an independent substream seed, e.g. one per sweep instance."""
    return mix64((seed & MASK64) ^ mix64((SPAWN_SALT + index) & MASK64))


class Rng:
    """Sequential SplitMix64 stream with the helpers the package needs."""

    def __init__(self, seed: int):
        self._seed = seed & MASK64
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + GAMMA) & MASK64
        return mix64(self._state)

    def uniform(self) -> float:
        # 53 high bits -> double in [0, 1)
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def bernoulli(self, p: float) -> bool:
        return self.uniform() < p

    def randint(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection (no modulo bias)."""
        if n <= 0:
            raise ValueError("randint needs n >= 1")
        limit = (MASK64 + 1) - ((MASK64 + 1) % n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(i + 1)
            items[i], items[j] = items[j], items[i]

    def choice(self, items):
        return items[self.randint(len(items))]

    def sample(self, items, k: int) -> list:
        """k distinct elements, order given by a partial Fisher-Yates."""
        pool = list(items)
        if k > len(pool):
            raise ValueError("sample larger than population")
        for i in range(k):
            j = i + self.randint(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]

    def normal(self) -> float:
        """Standard normal via Box-Muller (fresh pair each call, no cache)."""
        u1 = self.uniform()
        u2 = self.uniform()
        while u1 <= 1e-300:
            u1 = self.uniform()
        return math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)

    def spawn(self, index: int) -> "Rng":
        """Substream keyed off the construction seed (independent of reads)."""
        return Rng(spawn_seed(self._seed, index))


def u64_stream(seed: int, count: int) -> np.ndarray:
    """Vectorized: the first ``count`` outputs of ``Rng(seed)`` as uint64."""
    counters = np.arange(1, count + 1, dtype=np.uint64) * np.uint64(GAMMA)
    z = np.uint64(seed & MASK64) + counters
    z = (z ^ (z >> np.uint64(30))) * np.uint64(MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(MIX2)
    return z ^ (z >> np.uint64(31))


def uniform_stream(seed: int, count: int) -> np.ndarray:
    """Vectorized doubles in [0, 1), bit-identical to Rng.uniform calls."""
    return (u64_stream(seed, count) >> np.uint64(11)) * (1.0 / (1 << 53))
