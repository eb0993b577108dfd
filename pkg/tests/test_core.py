import operator
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lfsort import (
    SortConfig,
    Stage,
    compute_schedule,
    leapfrog,
    lf_samplesort,
    move_sample,
    partition_unsorted,
)
from lfsort.baselines import quicksort_ref
from lfsort.instrument import CountingComparator
from listing import listing_sort

TABLE_1 = [(1, 2), (3, 4), (7, 8), (15, 16), (31, 32), (63, 64), (127, 128), (255, 256)]
TABLE_2 = {
    2: [(1, 6), (7, 24), (31, 96), (127, 384), (511, 1536)],
    3: [(1, 14), (15, 112), (127, 896), (1023, 7168), (8191, 57344)],
    4: [(1, 30), (31, 480), (511, 7680), (8191, 122880), (131071, 1966080)],
}

int_lists = st.lists(st.integers(-50, 50), max_size=120)
ks = st.integers(1, 4)


class TestSortConfig:
    def test_m_is_derived(self):
        assert [SortConfig(k).m for k in (1, 2, 3, 4)] == [1, 3, 7, 15]

    @pytest.mark.parametrize("k", [0, -1, 41])
    def test_out_of_range(self, k):
        with pytest.raises(ValueError):
            SortConfig(k)

    def test_rejects_non_int(self):
        with pytest.raises(TypeError):
            SortConfig(1.5)

    def test_largest_k(self):
        assert SortConfig(40).m == 2**40 - 1


class TestSchedule:
    def test_table_1(self):
        assert compute_schedule(511, SortConfig(1))[:-1] == TABLE_1

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_table_2(self, k):
        rows = TABLE_2[k]
        s, r = rows[-1]
        assert compute_schedule(s + r, SortConfig(k))[:-1] == rows

    def test_n15_k1(self):
        assert compute_schedule(15, SortConfig(1)) == [(1, 2), (3, 4), (7, 8), (15, 0)]

    def test_n1000_k2(self):
        assert compute_schedule(1000, SortConfig(2)) == [(1, 6), (7, 24), (31, 96), (127, 384), (511, 489)]

    def test_n100_k1(self):
        assert compute_schedule(100, SortConfig(1)) == [(1, 2), (3, 4), (7, 8), (15, 16), (31, 32), (63, 37)]

    @pytest.mark.parametrize("n", [0, 1])
    def test_trivial(self, n):
        assert compute_schedule(n, SortConfig(3)) == []

    def test_negative(self):
        with pytest.raises(ValueError):
            compute_schedule(-1, SortConfig())

    def test_remainder_larger_than_gap(self):
        # r far exceeds n: the guard must not underflow into an extra stage
        assert compute_schedule(5, SortConfig(40)) == [(1, 4)]

    @given(st.integers(2, 10**7), ks)
    def test_invariants(self, n, k):
        m = (1 << k) - 1
        stages = compute_schedule(n, SortConfig(k))
        assert stages[0].s == 1
        for j, (a, b) in enumerate(zip(stages, stages[1:])):
            assert a.r == m * (a.s + 1)
            assert b.s == a.s + a.r
            # 1, 2^(k+1)-1, 2^(2k+1)-1, ...
            assert a.s == (1 << (k * j + 1)) - 1
        last = stages[-1]
        assert 0 <= last.r < m * (last.s + 1)
        assert last.s + last.r == n


class TestPartition:
    def test_example(self):
        seq = [3, 7, 9, 5, 1, 8, 2]
        counter = CountingComparator()
        j = partition_unsorted(seq, 1, 2, 6, counter)
        assert j == 5
        assert seq == [3, 7, 9, 5, 1, 2, 8]
        assert counter.count == 4

    def test_all_greater(self):
        seq = [1, 2, 9, 7, 8]
        assert partition_unsorted(seq, 1, 1, 4) == 1
        assert seq == [1, 2, 9, 7, 8]

    def test_all_smaller(self):
        seq = [10, 20, 3, 1, 2]
        assert partition_unsorted(seq, 1, 1, 4) == 4
        assert seq == [10, 20, 3, 1, 2]

    @given(st.lists(st.integers(0, 6), min_size=2, max_size=60), st.data())
    def test_postcondition_with_duplicates(self, values, data):
        ss = data.draw(st.integers(0, len(values) - 2))
        sm = data.draw(st.integers(0, ss))
        u = len(values) - 1
        seq = list(values)
        counter = CountingComparator()
        j = partition_unsorted(seq, sm, ss, u, counter)
        v = seq[sm]
        assert counter.count == u - ss
        assert ss <= j <= u
        assert seq[:ss + 1] == values[:ss + 1]
        assert all(x < v for x in seq[ss + 1:j + 1])
        assert all(x >= v for x in seq[j + 1:])
        assert sorted(seq) == sorted(values)


class TestMoveSample:
    def test_example(self):
        seq = [3, 7, 9, 5, 1, 2, 8]
        move_sample(seq, 1, 2, 5)
        assert seq == [3, 1, 2, 5, 7, 9, 8]

    def test_noop(self):
        seq = [3, 7, 9, 5, 1, 2, 8]
        move_sample(seq, 1, 2, 2)
        assert seq == [3, 7, 9, 5, 1, 2, 8]

    def test_single_pivot_two_smaller(self):
        seq = [5, 1, 2, 9]
        move_sample(seq, 0, 0, 2)
        assert seq == [2, 1, 5, 9]

    @given(st.lists(st.integers(0, 9), min_size=2, max_size=40), st.data())
    def test_postcondition(self, values, data):
        s1 = 0
        ss = data.draw(st.integers(0, len(values) - 2))
        sample = sorted(values[:ss + 1])
        seq = sample + values[ss + 1:]
        sm = (s1 + ss) // 2
        j = partition_unsorted(seq, sm, ss, len(seq) - 1)
        before = list(seq)
        move_sample(seq, sm, ss, j)
        d = j - ss
        assert seq[sm + d:j + 1] == before[sm:ss + 1]
        assert seq[:sm] == before[:sm]
        assert sorted(seq[sm:sm + d]) == sorted(before[ss + 1:j + 1])
        assert seq[j + 1:] == before[j + 1:]


class TestLeapfrog:
    def test_single_pivot(self):
        seq = [3, 1, 2]
        leapfrog(seq, 0, 0, 2)
        assert seq == [1, 2, 3]

    def test_no_unsorted_part(self):
        seq = [1, 4, 6]
        counter = CountingComparator()
        leapfrog(seq, 0, 2, 2, less=counter)
        assert seq == [1, 4, 6]
        assert counter.count == 0

    def test_empty_sample_delegates(self):
        seq = [2, 1]
        counter = CountingComparator()
        leapfrog(seq, 0, -1, 1, less=counter)
        assert seq == [1, 2]
        assert counter.count == 1

    @given(st.lists(st.integers(-20, 20), max_size=30), st.lists(st.integers(-20, 20), max_size=80), ks)
    def test_merges_sample(self, sample, unsorted, k):
        seq = sorted(sample) + unsorted
        leapfrog(seq, 0, len(sample) - 1, len(seq) - 1, SortConfig(k))
        assert seq == sorted(sample + unsorted)


class TestLfSamplesort:
    def test_empty(self):
        seq = []
        lf_samplesort(seq)
        assert seq == []

    def test_small(self):
        seq = [5, 2, 9, 1]
        lf_samplesort(seq)
        assert seq == [1, 2, 5, 9]

    def test_sorted_three(self):
        seq = [1, 2, 3]
        counter = CountingComparator()
        lf_samplesort(seq, SortConfig(1), counter)
        assert seq == [1, 2, 3]
        assert counter.count == 3

    def test_sub_range(self):
        seq = [9, 5, 4, 3, 0]
        lf_samplesort(seq, first=1, last=3)
        assert seq == [9, 3, 4, 5, 0]

    def test_custom_order(self):
        seq = ["bb", "a", "ccc", "dddd", ""]
        lf_samplesort(seq, SortConfig(2), lambda a, b: len(a) > len(b))
        assert seq == ["dddd", "ccc", "bb", "a", ""]

    @given(int_lists, ks)
    def test_sorts(self, values, k):
        seq = list(values)
        lf_samplesort(seq, SortConfig(k))
        assert seq == sorted(values)

    @given(int_lists)
    def test_k_agreement(self, values):
        outs = []
        for k in (1, 2, 3, 4):
            seq = list(values)
            lf_samplesort(seq, SortConfig(k))
            outs.append(seq)
        assert all(o == outs[0] for o in outs)

    @given(int_lists, st.integers(1, 9))
    def test_matches_listing(self, values, k):
        seq = list(values)
        calls = []

        def less(a, b):
            calls.append((a, b))
            return a < b

        lf_samplesort(seq, SortConfig(k), less)
        out, count, log = listing_sort(values, k)
        assert seq == out
        assert calls == log
        assert len(calls) == count

    def test_deep_adversarial_input(self):
        # first-pivot quicksort on sorted input nests n frames deep
        n = 5000
        seq = list(range(n))
        counter = CountingComparator()
        lf_samplesort(seq, SortConfig(13), counter)
        assert seq == list(range(n))
        assert counter.count == n * (n - 1) // 2

    @settings(max_examples=200)
    @given(st.lists(st.integers(-1000, 1000), max_size=100))
    def test_degenerates_to_quicksort(self, values):
        n = len(values)
        k = max(1, n.bit_length())
        lf = CountingComparator()
        seq = list(values)
        lf_samplesort(seq, SortConfig(k), lf)
        qs = CountingComparator()
        ref = list(values)
        quicksort_ref(ref, qs)
        assert lf.count == qs.count
        assert seq == ref

    def test_deterministic(self):
        rng = random.Random(7)
        values = [rng.randrange(100) for _ in range(500)]
        counts = []
        for _ in range(2):
            c = CountingComparator()
            lf_samplesort(list(values), SortConfig(2), c)
            counts.append(c.count)
        assert counts[0] == counts[1]

    def test_sorted_input_partitions_one_sided(self):
        seen = []

        class Watch:
            def frame(self, depth): pass
            def stage(self, s, r): pass
            def swap(self, i, j): pass
            def sample_moved(self, sm, ss, j): pass
            def partition(self, sm, ss, u, j): seen.append(j == ss)

        lf_samplesort(list(range(300)), SortConfig(1), operator.lt, tracer=Watch())
        assert seen and all(seen)

    def test_stage_boundaries_match_schedule(self):
        stages = []

        class Watch:
            def frame(self, depth): pass
            def swap(self, i, j): pass
            def partition(self, sm, ss, u, j): pass
            def sample_moved(self, sm, ss, j): pass
            def stage(self, s, r): stages.append(Stage(s, r))

        for n in (2, 3, 10, 100, 1000):
            stages.clear()
            seq = list(range(n, 0, -1))
            lf_samplesort(seq, SortConfig(2), tracer=Watch())
            assert stages == compute_schedule(n, SortConfig(2))
