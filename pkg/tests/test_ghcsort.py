from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oraclekit.errors import UnsortedInputError
from oraclekit.ghcsort import (
    ghc_sort,
    merge,
    merge_round,
    multiset_equal,
    split_and_normalize,
)


def insertion_sorted(s):
    """Independent oracle: classic insertion sort, no merging anywhere."""
    out = list(s)
    for i in range(1, len(out)):
        v = out[i]
        j = i
        while j > 0 and out[j - 1] > v:
            out[j] = out[j - 1]
            j -= 1
        out[j] = v
    return out


def test_pinned_example_full_pipeline():
    s = [3, 2, 8, 9, 3, 4, 5]
    segments = split_and_normalize(s)
    assert segments == [[2, 3], [8, 9], [3, 4, 5]]
    assert merge_round(segments) == [[2, 3, 8, 9], [3, 4, 5]]
    assert ghc_sort(s) == [2, 3, 3, 4, 5, 8, 9]


def test_split_normalizes_each_run_ascending():
    assert split_and_normalize([5, 4, 4, 1]) == [[1, 4, 4, 5]]
    assert split_and_normalize([1, 1]) == [[1, 1]]  # nonincreasing run, reversed
    assert split_and_normalize([]) == []
    assert split_and_normalize([7]) == [[7]]


def test_merge_keeps_ties_from_second():
    assert merge([1], [1]) == [1, 1]
    assert merge([2], [1, 2]) == [1, 2, 2]
    assert merge([], [3, 4]) == [3, 4]
    assert merge([3, 4], []) == [3, 4]


def test_merge_rejects_unsorted_input():
    with pytest.raises(UnsortedInputError):
        merge([2, 1], [3])
    with pytest.raises(UnsortedInputError):
        merge([3], [2, 1])


def test_merge_does_not_mutate_inputs():
    a, b = [1, 3], [2, 4]
    merge(a, b)
    assert a == [1, 3] and b == [2, 4]


def test_merge_round_pairs_left_to_right():
    segs = [[1], [2], [3], [4], [5]]
    assert merge_round(segs) == [[1, 2], [3, 4], [5]]
    # k segments shrink to ceil(k/2) per round
    for k in range(1, 10):
        segs = [[i] for i in range(k)]
        assert len(merge_round(segs)) == (k + 1) // 2


def test_sort_edge_shapes():
    assert ghc_sort([]) == []
    assert ghc_sort([4]) == [4]
    assert ghc_sort([2, 2, 2]) == [2, 2, 2]


def test_matches_insertion_sort_exhaustively_small():
    for n in range(8):
        for seq in product((0, 1, 2), repeat=n):
            s = list(seq)
            assert ghc_sort(s) == insertion_sorted(s), s


@settings(max_examples=300)
@given(st.lists(st.integers(-1000, 1000), max_size=80))
def test_matches_builtin_sorted_random(s):
    out = ghc_sort(s)
    assert out == sorted(s)
    assert multiset_equal(out, s)


def test_multiset_equal():
    assert multiset_equal([1, 2, 2], [2, 1, 2])
    assert not multiset_equal([1, 2], [1, 2, 2])
    assert multiset_equal([], [])
