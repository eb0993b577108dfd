"""Generalized Leapfrogging Samplesort over an arbitrary strict-less oracle.

A sorted prefix of size ``s`` is used as a pool of pivots to partition the
next ``m * (s + 1)`` elements, where ``m = 2**k - 1``.  The prefix then
absorbs that block and the process repeats.  ``k = 1`` is the original
leapfrogging samplesort; as ``m`` grows past the input length the procedure
becomes first-element-pivot quicksort.

The two mutually recursive procedures (``lf_samplesort`` and ``leapfrog``)
are driven from an explicit task stack so that deep adversarial recursions
do not hit the interpreter's recursion limit.  The order of comparisons is
the same as the plain recursive formulation.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import Any, Callable, MutableSequence, NamedTuple, Optional

Less = Callable[[Any, Any], bool]

MAX_K = 40
INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class SortConfig:
    """Fan-out exponent ``k``; the unsorted part is ``m * (s + 1)`` with ``m = 2**k - 1``."""

    k: int = 1
    m: int = field(init=False, repr=False)

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, int):
            raise TypeError(f"k must be an int, got {type(self.k).__name__}")
        if not 1 <= self.k <= MAX_K:
            raise ValueError(f"k must be in [1, {MAX_K}], got {self.k}")
        object.__setattr__(self, "m", (1 << self.k) - 1)


class Stage(NamedTuple):
    s: int
    r: int


def compute_schedule(n: int, config: SortConfig) -> list[Stage]:
    """Return the ``(s, r)`` stages the outer loop runs for ``n`` elements.

    The last entry is the trailing call that handles the remainder
    ``n - s``, which may be zero.  Sizes below two have no stages.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n <= 1:
        return []
    m = config.m
    stages = []
    s = 1
    r = m * (s + 1)
    # s + r <= n is the underflow-free form of s <= n - r.
    while s + r <= n:
        stages.append(Stage(s, r))
        s += r
        r = m * (s + 1)
        if r > INT64_MAX:
            raise OverflowError(f"unsorted-part size overflows int64 for k={config.k}, n={n}")
    stages.append(Stage(s, n - s))
    return stages


class Tracer:
    """No-op observer; subclass to watch a sort as it runs."""

    def frame(self, depth: int) -> None:
        pass

    def stage(self, s: int, r: int) -> None:
        pass

    def partition(self, sm: int, ss: int, u: int, j: int) -> None:
        pass

    def swap(self, i: int, j: int) -> None:
        pass

    def sample_moved(self, sm: int, ss: int, j: int) -> None:
        pass


def partition_unsorted(seq: MutableSequence, sm: int, ss: int, u: int,
                       less: Less = operator.lt, tracer: Optional[Tracer] = None) -> int:
    """Lomuto-partition ``seq[ss+1..u]`` around ``seq[sm]``.

    Calls ``less`` exactly ``u - ss`` times.  Returns ``j`` such that
    ``seq[ss+1..j]`` are less than the pivot and ``seq[j+1..u]`` are not.
    """
    v = seq[sm]
    j = ss
    for i in range(ss + 1, u + 1):
        if less(seq[i], v):
            j += 1
            if tracer is not None:
                tracer.swap(i, j)
            seq[j], seq[i] = seq[i], seq[j]
    return j


def move_sample(seq: MutableSequence, sm: int, ss: int, j: int,
                tracer: Optional[Tracer] = None) -> None:
    """Shift the pivot and right subsample ``seq[sm..ss]`` right by ``j - ss``.

    The left partition that occupied ``seq[ss+1..j]`` ends up in the vacated
    slots starting at ``sm``.  No comparisons.
    """
    if j <= ss:
        return
    d = j - ss
    for i in range(ss, sm - 1, -1):
        if tracer is not None:
            tracer.swap(i, i + d)
        seq[i], seq[i + d] = seq[i + d], seq[i]


_LF = 0
_LEAP = 1


def _run(seq, tasks, m, less, tracer):
    # Task layout: (kind, a, b, c, depth, stage-or-None).
    # _LF:   lf_samplesort(first=a, last=b)
    # _LEAP: leapfrog(s1=a, ss=b, u=c)
    push = tasks.append
    pop = tasks.pop
    while tasks:
        kind, a, b, c, depth, stage = pop()
        if kind == _LF:
            first, last = a, b
            if last <= first:
                continue
            if tracer is not None:
                tracer.frame(depth)
            n = last - first + 1
            calls = []
            s = 1
            r = m * (s + 1)
            while s + r <= n:
                calls.append((first, first + s - 1, first + s + r - 1, (s, r)))
                s += r
                r = m * (s + 1)
            calls.append((first, first + s - 1, last, (s, n - s)))
            top = stage is not None
            for s1, ss, u, st in reversed(calls):
                push((_LEAP, s1, ss, u, depth + 1, st if top else None))
            continue

        s1, ss, u = a, b, c
        if tracer is not None:
            tracer.frame(depth)
            if stage is not None:
                tracer.stage(*stage)
        if s1 > ss:
            push((_LF, ss + 1, u, 0, depth + 1, None))
        elif u > ss:
            sm = (s1 + ss) // 2
            j = partition_unsorted(seq, sm, ss, u, less, tracer)
            if tracer is not None:
                tracer.partition(sm, ss, u, j)
            move_sample(seq, sm, ss, j, tracer)
            if tracer is not None:
                tracer.sample_moved(sm, ss, j)
            push((_LEAP, sm + j - ss + 1, j, u, depth + 1, None))
            push((_LEAP, s1, sm - 1, sm + j - ss - 1, depth + 1, None))


def lf_samplesort(seq: MutableSequence, config: SortConfig = SortConfig(),
                  less: Less = operator.lt, *, first: int = 0, last: Optional[int] = None,
                  tracer: Optional[Tracer] = None) -> None:
    """Sort ``seq[first..last]`` (inclusive) in place.

    ``less(a, b)`` must be a strict weak order.  Equal keys are handled but
    their relative order is not preserved.  ``tracer.stage`` fires once per
    outer-loop stage of this call; nested calls on sub-ranges do not report
    stages.
    """
    if last is None:
        last = len(seq) - 1
    _run(seq, [(_LF, first, last, 0, 1, ())], config.m, less, tracer)


def leapfrog(seq: MutableSequence, s1: int, ss: int, u: int,
             config: SortConfig = SortConfig(), less: Less = operator.lt,
             tracer: Optional[Tracer] = None) -> None:
    """Merge the unsorted block ``seq[ss+1..u]`` into the sorted sample ``seq[s1..ss]``.

    ``s1 > ss`` means the sample is empty, in which case the block is sorted
    from scratch with :func:`lf_samplesort`.
    """
    _run(seq, [(_LEAP, s1, ss, u, 1, None)], config.m, less, tracer)
