"""Comparison, move and depth accounting for single sort runs."""

from __future__ import annotations

import operator
import time
from dataclasses import dataclass, field
from typing import Iterable, MutableSequence, Optional

import numpy as np

from lfsort import _kernel
from lfsort.core import Less, SortConfig, Stage, Tracer, lf_samplesort

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


@dataclass
class Metrics:
    """Counters for one sort.

    ``moves`` counts element writes, three per swap of two distinct slots.
    ``max_depth`` is the deepest nesting of lf_samplesort/leapfrog frames,
    where an lf_samplesort call on fewer than two elements is not a frame.
    ``sample_moves`` is the number of partitions whose left part was
    non-empty; it stays at zero when every partition is one-sided with all
    elements on the right.
    """

    comparisons: int = 0
    moves: int = 0
    max_depth: int = 0
    stages: list[Stage] = field(default_factory=list)
    wall_ns: int = 0
    partitions: int = 0
    sample_moves: int = 0

    def deterministic(self) -> dict:
        return {
            "comparisons": self.comparisons,
            "moves": self.moves,
            "max_depth": self.max_depth,
            "stages": [tuple(s) for s in self.stages],
            "partitions": self.partitions,
            "sample_moves": self.sample_moves,
        }


class CountingComparator:
    """Wrap a strict-less oracle and count how often it is called."""

    def __init__(self, base: Less = operator.lt, count: int = 0):
        self.base = base
        self.count = count

    def __call__(self, a, b) -> bool:
        self.count += 1
        return self.base(a, b)


def counting_comparator(base: Less = operator.lt) -> CountingComparator:
    return CountingComparator(base)


class MetricsTracer(Tracer):
    def __init__(self, metrics: Metrics):
        self.metrics = metrics

    def frame(self, depth):
        if depth > self.metrics.max_depth:
            self.metrics.max_depth = depth

    def stage(self, s, r):
        self.metrics.stages.append(Stage(s, r))

    def partition(self, sm, ss, u, j):
        self.metrics.partitions += 1
        if j > ss:
            self.metrics.sample_moves += 1

    def swap(self, i, j):
        if i != j:
            self.metrics.moves += 3


def _fits_int64(values: list) -> bool:
    return all(type(v) is int and INT64_MIN <= v <= INT64_MAX for v in values)


def run_instrumented(values: Iterable, config: SortConfig = SortConfig(),
                     less: Optional[Less] = None, backend: str = "auto",
                     tracer: Optional[Tracer] = None) -> tuple[list, Metrics]:
    """Sort a copy of ``values`` and return it with its :class:`Metrics`.

    ``backend`` is ``"auto"``, ``"python"`` or ``"native"``.  ``auto`` picks
    the compiled int64 kernel when no custom ``less`` or ``tracer`` is given
    and every value is a 64-bit int; the generic path otherwise.
    """
    data = list(values)
    if backend not in ("auto", "python", "native"):
        raise ValueError(f"unknown backend {backend!r}")
    native_ok = less is None and tracer is None and _fits_int64(data)
    if backend == "native" and not native_ok:
        raise ValueError("native backend needs int64 values and no custom comparator or tracer")
    use_native = backend == "native" or (backend == "auto" and native_ok)

    if use_native:
        arr = np.array(data, dtype=np.int64)
        metrics = sort_native(arr, config)
        return arr.tolist(), metrics

    return data, sort_instrumented(data, config, less, tracer)


def sort_instrumented(seq: MutableSequence, config: SortConfig = SortConfig(),
                      less: Optional[Less] = None, tracer: Optional[Tracer] = None) -> Metrics:
    """Sort ``seq`` in place through the generic path and return its metrics."""
    metrics = Metrics()
    counter = CountingComparator(less if less is not None else operator.lt)
    mt = MetricsTracer(metrics)
    if tracer is not None:
        mt = _Tee(mt, tracer)
    t0 = time.perf_counter_ns()
    lf_samplesort(seq, config, counter, tracer=mt)
    metrics.wall_ns = time.perf_counter_ns() - t0
    metrics.comparisons = counter.count
    return metrics


def sort_native(arr: np.ndarray, config: SortConfig = SortConfig()) -> Metrics:
    """Sort an int64 array in place with the compiled kernel."""
    if arr.dtype != np.int64:
        raise TypeError(f"expected int64 array, got {arr.dtype}")
    metrics = Metrics()
    t0 = time.perf_counter_ns()
    stats, stages = _kernel.sort_array(arr, config.m)
    metrics.wall_ns = time.perf_counter_ns() - t0
    metrics.comparisons = int(stats[_kernel.COMPARISONS])
    metrics.moves = int(stats[_kernel.MOVES])
    metrics.max_depth = int(stats[_kernel.MAX_DEPTH])
    metrics.partitions = int(stats[_kernel.PARTITIONS])
    metrics.sample_moves = int(stats[_kernel.SAMPLE_MOVES])
    metrics.stages = [Stage(int(s), int(r)) for s, r in stages]
    return metrics


class _Tee(Tracer):
    def __init__(self, *tracers):
        self.tracers = tracers

    def frame(self, depth):
        for t in self.tracers:
            t.frame(depth)

    def stage(self, s, r):
        for t in self.tracers:
            t.stage(s, r)

    def partition(self, sm, ss, u, j):
        for t in self.tracers:
            t.partition(sm, ss, u, j)

    def swap(self, i, j):
        for t in self.tracers:
            t.swap(i, j)

    def sample_moved(self, sm, ss, j):
        for t in self.tracers:
            t.sample_moved(sm, ss, j)
