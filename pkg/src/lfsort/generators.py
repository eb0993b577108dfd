"""Seeded input generators.

Randomness comes from SplitMix64 (Steele, Lea and Flood's 64-bit mixer,
the seeding generator of java.util.SplittableRandom) feeding a
Fisher-Yates shuffle that walks ``i = n-1 .. 1`` and draws ``j`` uniformly
from ``[0, i]`` by rejection sampling.  Both are a few lines of integer
arithmetic, so golden vectors do not depend on numpy's or CPython's RNG
internals.
"""

from __future__ import annotations

from dataclasses import dataclass

MASK64 = (1 << 64) - 1

KINDS = ("random_perm", "sorted_asc", "sorted_desc", "few_unique", "all_equal")
_CLI_NAMES = {
    "random": "random_perm",
    "sorted": "sorted_asc",
    "reversed": "sorted_desc",
    "equal": "all_equal",
}


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        # largest multiple of bound that fits in 64 bits
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            x = self.next()
            if x < limit:
                return x % bound


def shuffle(values: list, rng: SplitMix64) -> None:
    for i in range(len(values) - 1, 0, -1):
        j = rng.below(i + 1)
        values[i], values[j] = values[j], values[i]


@dataclass(frozen=True)
class Distribution:
    kind: str
    n: int
    seed: int = 0
    distinct: int = 0  # few_unique only

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown distribution kind {self.kind!r}")
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        if self.kind == "few_unique" and self.distinct <= 0:
            raise ValueError(f"few_unique needs a positive distinct-value count, got {self.distinct}")

    @classmethod
    def parse(cls, name: str, n: int, seed: int = 0) -> "Distribution":
        """Build from a CLI name: random, sorted, reversed, fewunique:<d>, equal."""
        if name.startswith("fewunique:"):
            try:
                d = int(name.split(":", 1)[1])
            except ValueError:
                raise ValueError(f"bad distinct-value count in {name!r}") from None
            return cls("few_unique", n, seed, d)
        if name not in _CLI_NAMES:
            raise ValueError(f"unknown distribution {name!r}")
        return cls(_CLI_NAMES[name], n, seed)


def generate(dist: Distribution) -> list[int]:
    n = dist.n
    if dist.kind == "sorted_asc":
        return list(range(n))
    if dist.kind == "sorted_desc":
        return list(range(n - 1, -1, -1))
    if dist.kind == "all_equal":
        return [0] * n
    if dist.kind == "few_unique":
        # cycling 0..d-1 guarantees exactly min(d, n) distinct values
        values = [i % dist.distinct for i in range(n)]
    else:
        values = list(range(n))
    shuffle(values, SplitMix64(dist.seed))
    return values
