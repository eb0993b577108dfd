"""Reference sorts used as oracles by the benchmark and verification tools."""

from __future__ import annotations

import functools
import operator
from typing import MutableSequence

from lfsort.core import Less


def quicksort_ref(seq: MutableSequence, less: Less = operator.lt) -> None:
    """First-element-pivot Lomuto quicksort, in place.

    Each partition of ``lo..hi`` calls ``less(seq[i], pivot)`` once for every
    ``i`` in ``lo+1..hi`` and then swaps the pivot into its final slot.
    """
    ranges = [(0, len(seq) - 1)]
    while ranges:
        lo, hi = ranges.pop()
        if hi <= lo:
            continue
        pivot = seq[lo]
        j = lo
        for i in range(lo + 1, hi + 1):
            if less(seq[i], pivot):
                j += 1
                seq[i], seq[j] = seq[j], seq[i]
        seq[lo], seq[j] = seq[j], seq[lo]
        ranges.append((j + 1, hi))
        ranges.append((lo, j - 1))


def platform_sort(seq: MutableSequence, less: Less = operator.lt) -> None:
    """The interpreter's built-in sort; ``less`` is called once per comparison it makes."""
    # cmp_to_key's __lt__ only tests cmp(a, b) < 0, which is all timsort asks
    key = functools.cmp_to_key(lambda a, b: -1 if less(a, b) else 0)
    seq[:] = sorted(seq, key=key)
