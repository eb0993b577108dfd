"""Generalized leapfrogging samplesort with comparison instrumentation and cost models."""

from lfsort.core import (
    SortConfig,
    Stage,
    Tracer,
    compute_schedule,
    leapfrog,
    lf_samplesort,
    move_sample,
    partition_unsorted,
)
from lfsort.instrument import Metrics, counting_comparator, run_instrumented, sort_native

__all__ = [
    "Metrics",
    "SortConfig",
    "Stage",
    "Tracer",
    "compute_schedule",
    "counting_comparator",
    "leapfrog",
    "lf_samplesort",
    "move_sample",
    "partition_unsorted",
    "run_instrumented",
    "sort_native",
]
