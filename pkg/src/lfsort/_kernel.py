"""Compiled int64 path.

Same task-stack traversal as :mod:`lfsort.core`, specialised to native
``<`` on int64 so that adversarial inputs around a million elements sort in
well under a second.  Counters are accumulated inline.  The test suite
checks that every counter agrees with the generic path driven by a counting
comparator.
"""

import numpy as np
from numba import njit

# stats slots
COMPARISONS = 0
MOVES = 1
MAX_DEPTH = 2
PARTITIONS = 3
SAMPLE_MOVES = 4
N_STATS = 5

_LF = 0
_LEAP = 1
_NO_STAGE = -1


@njit(cache=True)
def _grow(stack):
    bigger = np.empty((stack.shape[0] * 2, stack.shape[1]), dtype=np.int64)
    bigger[: stack.shape[0]] = stack
    return bigger


@njit(cache=True, nogil=True)
def lf_sort_int64(a, m, stats, stages):
    """Sort ``a`` in place.  Returns the number of top-level stages written to ``stages``."""
    n = a.shape[0]
    if n <= 1:
        return 0
    # columns: kind, a, b, c, depth, stage_s, stage_r
    stack = np.empty((64, 7), dtype=np.int64)
    top = 0
    n_stages = 0
    stack[0, 0] = _LF
    stack[0, 1] = 0
    stack[0, 2] = n - 1
    stack[0, 3] = 0
    stack[0, 4] = 1
    stack[0, 5] = 0  # marks the outermost call
    stack[0, 6] = 0
    top = 1
    calls = np.empty((130, 5), dtype=np.int64)
    while top > 0:
        top -= 1
        kind = stack[top, 0]
        x = stack[top, 1]
        y = stack[top, 2]
        z = stack[top, 3]
        depth = stack[top, 4]
        st_s = stack[top, 5]
        st_r = stack[top, 6]
        if kind == _LF:
            first = x
            last = y
            if last <= first:
                continue
            if depth > stats[MAX_DEPTH]:
                stats[MAX_DEPTH] = depth
            length = last - first + 1
            nc = 0
            s = 1
            r = m * (s + 1)
            while s + r <= length:
                calls[nc, 0] = first
                calls[nc, 1] = first + s - 1
                calls[nc, 2] = first + s + r - 1
                calls[nc, 3] = s
                calls[nc, 4] = r
                nc += 1
                s += r
                r = m * (s + 1)
            calls[nc, 0] = first
            calls[nc, 1] = first + s - 1
            calls[nc, 2] = last
            calls[nc, 3] = s
            calls[nc, 4] = length - s
            nc += 1
            outer = st_s == 0
            while top + nc >= stack.shape[0]:
                stack = _grow(stack)
            for q in range(nc - 1, -1, -1):
                stack[top, 0] = _LEAP
                stack[top, 1] = calls[q, 0]
                stack[top, 2] = calls[q, 1]
                stack[top, 3] = calls[q, 2]
                stack[top, 4] = depth + 1
                if outer:
                    stack[top, 5] = calls[q, 3]
                    stack[top, 6] = calls[q, 4]
                else:
                    stack[top, 5] = _NO_STAGE
                    stack[top, 6] = _NO_STAGE
                top += 1
            continue

        s1 = x
        ss = y
        u = z
        if depth > stats[MAX_DEPTH]:
            stats[MAX_DEPTH] = depth
        if st_s > 0:
            stages[n_stages, 0] = st_s
            stages[n_stages, 1] = st_r
            n_stages += 1
        if top + 2 >= stack.shape[0]:
            stack = _grow(stack)
        if s1 > ss:
            stack[top, 0] = _LF
            stack[top, 1] = ss + 1
            stack[top, 2] = u
            stack[top, 3] = 0
            stack[top, 4] = depth + 1
            stack[top, 5] = _NO_STAGE
            stack[top, 6] = _NO_STAGE
            top += 1
        elif u > ss:
            sm = (s1 + ss) // 2
            v = a[sm]
            j = ss
            for i in range(ss + 1, u + 1):
                if a[i] < v:
                    j += 1
                    if i != j:
                        t = a[j]
                        a[j] = a[i]
                        a[i] = t
                        stats[MOVES] += 3
            stats[COMPARISONS] += u - ss
            stats[PARTITIONS] += 1
            if j > ss:
                stats[SAMPLE_MOVES] += 1
                d = j - ss
                for i in range(ss, sm - 1, -1):
                    t = a[i]
                    a[i] = a[i + d]
                    a[i + d] = t
                stats[MOVES] += 3 * (ss - sm + 1)
            stack[top, 0] = _LEAP
            stack[top, 1] = sm + j - ss + 1
            stack[top, 2] = j
            stack[top, 3] = u
            stack[top, 4] = depth + 1
            stack[top, 5] = _NO_STAGE
            stack[top, 6] = _NO_STAGE
            top += 1
            stack[top, 0] = _LEAP
            stack[top, 1] = s1
            stack[top, 2] = sm - 1
            stack[top, 3] = sm + j - ss - 1
            stack[top, 4] = depth + 1
            stack[top, 5] = _NO_STAGE
            stack[top, 6] = _NO_STAGE
            top += 1
    return n_stages


def sort_array(a: np.ndarray, m: int):
    """Sort an int64 array in place; return ``(stats, stages)``."""
    stats = np.zeros(N_STATS, dtype=np.int64)
    stages = np.zeros((130, 2), dtype=np.int64)
    n_stages = lf_sort_int64(a, np.int64(m), stats, stages)
    return stats, stages[:n_stages]
