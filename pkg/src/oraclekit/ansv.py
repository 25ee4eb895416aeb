"""All nearest smaller values, both directions, via one stack pass.

For each index the *left neighbor* is the closest preceding index
holding a strictly smaller value (the *right neighbor* is the mirror
notion). The single-pass algorithm keeps a stack of candidate indices:
for each index x it pops every stacked index y with ``s[y] >= s[x]``;
the surviving top, if any, is x's neighbor and is only inspected, never
popped. Popping it is a classic off-by-one trap that silently corrupts
later answers, since the survivor must stay available for the indices
after x. x is then pushed.

Equal values are popped by the ``>=`` test, so ties never count as
neighbors; the reported neighbor always holds a strictly smaller value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .instrument import Tally

__all__ = [
    "AnsvReport",
    "NeighborArray",
    "check_ansv",
    "left_neighbors",
    "oracle_neighbors",
    "right_neighbors",
]


@dataclass(frozen=True)
class NeighborArray:
    """Per-index optional neighbor indices (0-based, None = absent)."""

    neighbors: tuple[Optional[int], ...]
    direction: str  # "left" or "right"


def _scan(s: Sequence[int], order: range) -> tuple[list[Optional[int]], list[int], int]:
    """Run the stack pass over ``order``; return (neighbors, final stack, pops)."""
    out: list[Optional[int]] = [None] * len(s)
    stack: list[int] = []
    pops = 0
    for x in order:
        v = s[x]
        while stack and s[stack[-1]] >= v:
            stack.pop()
            pops += 1
        if stack:
            out[x] = stack[-1]
        stack.append(x)
    return out, stack, pops


def left_neighbors(s: Sequence[int], tally: Optional[Tally] = None) -> NeighborArray:
    """Nearest strictly-smaller value to the left of each index.

    Single left-to-right pass; total pops are at most n (each index is
    pushed once), counted into ``tally.pops`` when a tally is given.
    """
    out, _, pops = _scan(s, range(len(s)))
    if tally is not None:
        tally.pops += pops
    return NeighborArray(tuple(out), "left")


def right_neighbors(s: Sequence[int], tally: Optional[Tally] = None) -> NeighborArray:
    """Nearest strictly-smaller value to the right of each index.

    Mirror of ``left_neighbors``, scanning from the last index toward
    the first.
    """
    out, _, pops = _scan(s, range(len(s) - 1, -1, -1))
    if tally is not None:
        tally.pops += pops
    return NeighborArray(tuple(out), "right")


def oracle_neighbors(s: Sequence[int], direction: str) -> NeighborArray:
    """Reference answer by direct quadratic search from the definition.

    left: neighbors[i] = max{ y < i : s[y] < s[i] } or absent;
    right: neighbors[i] = min{ y > i : s[y] < s[i] } or absent.
    """
    if direction not in ("left", "right"):
        raise ValueError(f"direction must be 'left' or 'right', got {direction!r}")
    n = len(s)
    out: list[Optional[int]] = [None] * n
    if direction == "left":
        for i in range(n):
            vi = s[i]
            for y in range(i - 1, -1, -1):
                if s[y] < vi:
                    out[i] = y
                    break
    else:
        for i in range(n):
            vi = s[i]
            for y in range(i + 1, n):
                if s[y] < vi:
                    out[i] = y
                    break
    return NeighborArray(tuple(out), direction)


@dataclass(frozen=True)
class AnsvReport:
    """Outcome of the three left-neighbor checks."""

    index_ok: bool
    value_ok: bool
    smallest_ok: bool

    def all_ok(self) -> bool:
        return self.index_ok and self.value_ok and self.smallest_ok


def check_ansv(s: Sequence[int], a: NeighborArray) -> AnsvReport:
    """Evaluate the three neighbor properties of a left-direction array.

    index_ok: every present neighbor is a valid index before its owner.
    value_ok: every present neighbor holds a strictly smaller value.
    smallest_ok: no index between the neighbor (exclusive) and the owner
    holds a smaller value. Evaluated by direct scan, independent of the
    stack algorithm.
    """
    if a.direction != "left":
        raise ValueError("check_ansv checks left arrays; mirror the sequence for right")
    n = len(s)
    nb = a.neighbors

    index_ok = True
    for i in range(n):
        y = nb[i]
        if y is not None and not 0 <= y < i:
            index_ok = False
            break

    value_ok = True
    for i in range(n):
        y = nb[i]
        if y is not None and not (0 <= y < n and s[y] < s[i]):
            value_ok = False
            break

    smallest_ok = True
    for i in range(n):
        y = nb[i]
        start = 0 if y is None else max(0, y + 1)
        vi = s[i]
        for j in range(start, i):
            if s[j] < vi:
                smallest_ok = False
                break
        if not smallest_ok:
            break

    return AnsvReport(index_ok=index_ok, value_ok=value_ok, smallest_ok=smallest_ok)
