"""Randomised and adversarial self-checks behind ``lfsort verify``."""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from lfsort.baselines import quicksort_ref
from lfsort.core import Less, SortConfig, Tracer, compute_schedule, leapfrog
from lfsort.cost_model import (
    AverageCase,
    WorstCase,
    a_small_table,
    brute_force_avg,
    brute_force_avg_generic,
    stage_points,
)
from lfsort.generators import Distribution, generate
from lfsort.instrument import CountingComparator, run_instrumented, sort_instrumented

DISTS = ("random", "sorted", "reversed", "fewunique:5", "equal")
SMALL_N = 64


@dataclass
class Failure:
    check: str
    detail: str
    seed: Optional[int] = None
    n: Optional[int] = None
    k: Optional[int] = None
    dist: Optional[str] = None

    def __str__(self):
        where = " ".join(f"{name}={value}" for name, value in
                         (("seed", self.seed), ("n", self.n), ("k", self.k), ("dist", self.dist))
                         if value is not None)
        return f"FAIL {self.check}: {self.detail}" + (f" [reproduce: {where}]" if where else "")


class _PostconditionTracer(Tracer):
    """Check partition and sample-move postconditions while a sort runs."""

    def __init__(self, seq: list, failures: list):
        self.seq = seq
        self.failures = failures
        self.before = None

    def partition(self, sm, ss, u, j):
        seq = self.seq
        v = seq[sm]
        if not ss <= j <= u:
            self.failures.append(f"partition boundary j={j} outside [{ss}, {u}]")
        elif any(not seq[i] < v for i in range(ss + 1, j + 1)):
            self.failures.append(f"partition left part not strictly below pivot (sm={sm}, ss={ss}, j={j})")
        elif any(seq[i] < v for i in range(j + 1, u + 1)):
            self.failures.append(f"partition right part below pivot (sm={sm}, ss={ss}, j={j})")
        self.before = seq[sm:ss + 1]

    def sample_moved(self, sm, ss, j):
        d = j - ss
        block = self.seq[sm + d:j + 1]
        if block != self.before:
            self.failures.append(f"sample block not relocated intact (sm={sm}, ss={ss}, j={j})")
        elif any(block[i + 1] < block[i] for i in range(len(block) - 1)):
            self.failures.append(f"relocated sample block unsorted (sm={sm}, ss={ss}, j={j})")


def _sizes(max_n: int) -> list[int]:
    sizes = list(range(min(max_n, SMALL_N) + 1))
    p = 128
    while p <= max_n:
        sizes.append(p)
        p *= 2
    if max_n > SMALL_N and max_n not in sizes:
        sizes.append(max_n)
    return sizes


def _check_sort(values, n, k, dist, seed, less, failures):
    config = SortConfig(k)
    expected = sorted(values)
    seq = list(values)
    post: list[str] = []
    counter = CountingComparator(less)
    metrics = sort_instrumented(seq, config, counter, _PostconditionTracer(seq, post))
    out = seq
    where = dict(seed=seed, n=n, k=k, dist=dist)
    if any(out[i + 1] < out[i] for i in range(len(out) - 1)):
        failures.append(Failure("sortedness", "output has an adjacent inversion", **where))
    if out != expected:
        failures.append(Failure("permutation", "output differs from the platform sort", **where))
    for msg in post[:1]:
        failures.append(Failure("partition/move postcondition", msg, **where))
    if metrics.stages != compute_schedule(n, config):
        failures.append(Failure("schedule", f"observed {metrics.stages}", **where))
    if counter.count != metrics.comparisons:
        failures.append(Failure("counting", f"{counter.count} oracle calls, {metrics.comparisons} counted", **where))
    if n <= 1 and (metrics.comparisons or metrics.moves):
        failures.append(Failure("trivial sizes", "work done on n <= 1", **where))

    native_out, native = run_instrumented(values, config, backend="native")
    if native.deterministic() != metrics.deterministic() or native_out != out:
        failures.append(Failure("native agreement", "compiled kernel disagrees with generic path", **where))
    _, again = run_instrumented(values, config, backend="native")
    if again.deterministic() != native.deterministic():
        failures.append(Failure("determinism", "repeated run changed metrics", **where))
    if dist == "sorted" and metrics.sample_moves:
        failures.append(Failure("worst-case trigger", f"{metrics.sample_moves} two-sided partitions", **where))
    return out


def _check_pivot_levels(seed, k, failures, sigma_max=40):
    # distinct keys: sample = even numbers, unsorted = odd numbers
    for sigma in range(1, sigma_max + 1):
        sample = [2 * i for i in range(sigma)]
        r = generate(Distribution("random_perm", SortConfig(k).m * (sigma + 1), seed + sigma))
        unsorted = [2 * x + 1 for x in r]
        seq = sample + unsorted
        sample_set = set(sample)
        hits: dict[int, int] = {}

        def less(a, b):
            if b in sample_set:
                hits[a] = hits.get(a, 0) + 1
            return a < b

        leapfrog(seq, 0, sigma - 1, len(seq) - 1, SortConfig(k), less)
        bound = math.ceil(math.log2(sigma + 1))
        worst = max(hits.values(), default=0)
        if worst > bound or seq != sorted(seq):
            failures.append(Failure("pivot levels", f"sample {sigma}: {worst} pivots for one element, bound {bound}",
                                    seed=seed + sigma, k=k))
            return


def _check_generators(max_n, seed, failures):
    for n in _sizes(max_n):
        for name in DISTS:
            dist = Distribution.parse(name, n, seed)
            values = generate(dist)
            if values != generate(dist) or len(values) != n:
                failures.append(Failure("generator determinism", name, seed=seed, n=n, dist=name))
            if dist.kind == "random_perm" and sorted(values) != list(range(n)):
                failures.append(Failure("generator multiset", "not a permutation of 0..n-1", seed=seed, n=n, dist=name))
            if dist.kind == "few_unique" and n and len(set(values)) != min(dist.distinct, n):
                failures.append(Failure("generator multiset", "wrong distinct count", seed=seed, n=n, dist=name))


def _check_cost_model(max_n, ks, failures):
    for k in ks:
        if k > 3:
            continue
        w = WorstCase(k)
        for n in stage_points(k, max_n):
            _, metrics = run_instrumented(list(range(n)), SortConfig(k), backend="native")
            if metrics.comparisons > w(n):
                failures.append(Failure("stage-point dominance",
                                        f"{metrics.comparisons} comparisons > bound {w(n):.1f}", n=n, k=k, dist="sorted"))
        a = AverageCase(k, a_small_table(k))
        grid = sorted(set(range(min(max_n, SMALL_N) + 1)) | set(_sizes(max_n)))
        for name, model in (("worst-case bound", w), ("average-case model", a)):
            values = [model(n) for n in grid]
            for n0, v0, v1 in zip(grid, values, values[1:]):
                if v1 < v0:
                    failures.append(Failure("monotonicity", f"{name} drops after n={n0}", n=n0, k=k))
                    break
        for n in range(min(max_n, 6) + 1):
            if brute_force_avg(n, k) != brute_force_avg_generic(n, k):
                failures.append(Failure("brute-force agreement", "enumerations disagree", n=n, k=k))


def _check_degeneration(max_n, seed, failures, trials=50):
    cap = min(max_n, 256)
    for t in range(trials):
        s = seed + t
        n = generate(Distribution("random_perm", cap + 1, s))[0] if cap else 0
        values = generate(Distribution("random_perm", n, s))
        k = max(1, (n).bit_length())
        lf = CountingComparator()
        _, metrics = run_instrumented(values, SortConfig(k), lf, backend="python")
        qs = CountingComparator()
        quicksort_ref(list(values), qs)
        if metrics.comparisons != qs.count:
            failures.append(Failure("quicksort degeneration", f"{metrics.comparisons} vs {qs.count}",
                                    seed=s, n=n, k=k, dist="random"))


def run_verify(max_n: int = 64, seed: int = 0, ks: Iterable[int] = (1, 2, 3, 4),
               less: Less = operator.lt,
               report: Callable[[str], None] = print) -> list[Failure]:
    """Run every check and return the failures.  ``less`` is the comparator under test."""
    ks = list(ks)
    failures: list[Failure] = []
    if max_n <= 0:
        report("warning: max-n <= 0, nothing to check")
        return failures
    for n in _sizes(max_n):
        for name in DISTS:
            dist = Distribution.parse(name, n, seed)
            values = generate(dist)
            outputs = [_check_sort(values, n, k, name, seed, less, failures) for k in ks]
            if any(o != outputs[0] for o in outputs):
                failures.append(Failure("k-agreement", "outputs differ across k", seed=seed, n=n, dist=name))
    for k in ks:
        _check_pivot_levels(seed, k, failures, sigma_max=min(max_n, 40))
    _check_generators(max_n, seed, failures)
    _check_cost_model(max_n, ks, failures)
    _check_degeneration(max_n, seed, failures)
    for f in failures:
        report(str(f))
    return failures
