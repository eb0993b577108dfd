"""Worst-case and average-case comparison recurrences, plus an exact small-n oracle.

Both recurrences split ``n`` into a sample of size

    s = max(1, (n - m) // (m + 1)),   m = 2**k - 1,

which is exact when ``n = s + m*(s+1)`` (the sizes ``2**(k*j) - 1``
returned by :func:`stage_points`) and extends the recurrences to every
other ``n``.  Logarithms are base 2.
"""

from __future__ import annotations

import functools
import itertools
import math
from fractions import Fraction
from typing import Mapping

from lfsort.core import SortConfig, lf_samplesort
from lfsort.instrument import CountingComparator, run_instrumented

BRUTE_FORCE_MAX_N = 8


def split(n: int, m: int) -> int:
    return max(1, (n - m) // (m + 1))


class WorstCase:
    """``W(n) = W(s) + W(n-s) + (n-s) log2(s+1)``, ``W(0) = W(1) = 0``."""

    def __init__(self, k: int):
        self.m = SortConfig(k).m
        self.memo: dict[int, float] = {0: 0.0, 1: 0.0}

    def __call__(self, n: int) -> float:
        if n < 0:
            raise ValueError(f"n must be non-negative, got {n}")
        memo = self.memo
        # explicit stack: for large k the split peels one element per level
        todo = [n]
        while todo:
            x = todo[-1]
            if x in memo:
                todo.pop()
                continue
            s = split(x, self.m)
            missing = [y for y in (s, x - s) if y not in memo]
            if missing:
                todo.extend(missing)
                continue
            memo[x] = memo[s] + memo[x - s] + (x - s) * math.log2(s + 1)
            todo.pop()
        return memo[n]


class AverageCase:
    """``A(n) = A(s) + m(s+1) log2(s+1) + (s+1) A_small(m)``, ``A(0) = A(1) = 0``.

    A model, not an exact expectation: it assumes every partition left after
    the sample is exhausted has the mean size ``m``.
    """

    def __init__(self, k: int, table: Mapping[int, Fraction]):
        self.m = SortConfig(k).m
        if self.m not in table:
            raise ValueError(f"expectation table has no entry for size {self.m}")
        self.base = float(table[self.m])
        self.memo: dict[int, float] = {0: 0.0, 1: 0.0}

    def __call__(self, n: int) -> float:
        if n < 0:
            raise ValueError(f"n must be non-negative, got {n}")
        memo = self.memo
        chain = []
        x = n
        while x not in memo:
            chain.append(x)
            x = split(x, self.m)
        for x in reversed(chain):
            s = split(x, self.m)
            memo[x] = memo[s] + self.m * (s + 1) * math.log2(s + 1) + (s + 1) * self.base
        return memo[n]


def worst_case_bound(n: int, k: int) -> float:
    return WorstCase(k)(n)


def avg_case_model(n: int, k: int, table: Mapping[int, Fraction] | None = None) -> float:
    if table is None:
        table = a_small_table(k)
    return AverageCase(k, table)(n)


def _check_brute_force(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force enumerates n! permutations; n={n} exceeds {BRUTE_FORCE_MAX_N}")


def brute_force_avg(n: int, k: int) -> Fraction:
    """Exact mean comparison count of the sort over all ``n!`` orderings of distinct keys."""
    _check_brute_force(n)
    config = SortConfig(k)
    total = 0
    count = 0
    for perm in itertools.permutations(range(n)):
        _, metrics = run_instrumented(perm, config)
        total += metrics.comparisons
        count += 1
    return Fraction(total, count)


def brute_force_avg_generic(n: int, k: int) -> Fraction:
    """Same quantity as :func:`brute_force_avg`, tallied through the generic core."""
    _check_brute_force(n)
    config = SortConfig(k)
    counter = CountingComparator()
    perms = math.factorial(n)
    for perm in itertools.permutations(range(n)):
        lf_samplesort(list(perm), config, counter)
    return Fraction(counter.count, perms)


@functools.lru_cache(maxsize=None)
def a_small_table(k: int) -> dict[int, Fraction]:
    """Exact expected comparisons for every size ``0..2**k - 1``."""
    m = SortConfig(k).m
    if m > BRUTE_FORCE_MAX_N:
        raise ValueError(f"k={k} needs n={m} enumeration, above the limit {BRUTE_FORCE_MAX_N}")
    return {p: brute_force_avg(p, k) for p in range(m + 1)}


def stage_points(k: int, max_n: int) -> list[int]:
    """Sizes ``2**(k*j) - 1 <= max_n`` (``j >= 1``) where the recurrences are exact."""
    SortConfig(k)
    points = []
    j = 1
    while (1 << (k * j)) - 1 <= max_n:
        points.append((1 << (k * j)) - 1)
        j += 1
    return points
