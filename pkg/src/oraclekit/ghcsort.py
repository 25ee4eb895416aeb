"""Bottom-up mergesort over maximal monotonic runs.

The input is split at its monotonic cutpoints, nonincreasing segments
are reversed so every segment is sorted ascending, and segments are
then merged pairwise round by round until one remains. Ties in the
merge take the element from the second input; no stability guarantee
is made beyond that.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .errors import UnsortedInputError
from .monotonic import compute_cutpoints

__all__ = [
    "ghc_sort",
    "merge",
    "merge_round",
    "multiset_equal",
    "split_and_normalize",
]


def split_and_normalize(s: Sequence[int]) -> list[list[int]]:
    """Split ``s`` into maximal monotonic segments, each sorted ascending.

    Segments whose elements were nonincreasing are reversed; strictly
    increasing ones are copied as-is. The concatenation of the result
    is a permutation of ``s``. Empty input gives no segments.
    """
    cut = compute_cutpoints(s)
    segments = []
    for lo, hi in zip(cut, cut[1:]):
        seg = list(s[lo:hi])
        # Direction is committed by the first pair: not strictly
        # increasing means the whole segment is nonincreasing.
        if len(seg) >= 2 and seg[0] >= seg[1]:
            seg.reverse()
        segments.append(seg)
    return segments


def _require_sorted(seq: Sequence[int], which: str) -> None:
    for i in range(1, len(seq)):
        if seq[i - 1] > seq[i]:
            raise UnsortedInputError(f"{which} input to merge is not sorted")


def merge(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Merge two sorted sequences into one sorted sequence.

    On equal heads the element of ``b`` is taken first. Inputs are
    validated (UnsortedInputError) and never mutated.
    """
    _require_sorted(a, "first")
    _require_sorted(b, "second")
    merged: list[int] = []
    x, y = 0, 0
    la, lb = len(a), len(b)
    while x < la and y < lb:
        if a[x] < b[y]:
            merged.append(a[x])
            x += 1
        else:
            merged.append(b[y])
            y += 1
    merged.extend(a[x:la])
    merged.extend(b[y:lb])
    return merged


def merge_round(segments: list[list[int]]) -> list[list[int]]:
    """Merge adjacent segment pairs left to right.

    ``[a, b, c, d, e]`` becomes ``[merge(a, b), merge(c, d), e]``; an
    odd trailing segment is carried over unchanged.
    """
    out = []
    for i in range(0, len(segments) - 1, 2):
        out.append(merge(segments[i], segments[i + 1]))
    if len(segments) % 2:
        out.append(segments[-1])
    return out


def ghc_sort(s: Sequence[int]) -> list[int]:
    """Sort ``s`` by merging its normalized monotonic segments.

    Returns a new list; the input is never mutated. Reaching a single
    segment takes exactly ceil(log2(k)) rounds for k initial segments.
    """
    segments = split_and_normalize(s)
    if not segments:
        return []
    while len(segments) > 1:
        segments = merge_round(segments)
    return segments[0]


def multiset_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    """True when ``a`` and ``b`` contain the same values with the same
    multiplicities."""
    return Counter(a) == Counter(b)
