"""Cartesian tree construction from nearest-smaller-value arrays.

The Cartesian tree of a distinct-valued sequence is the unique binary
tree with one node per index whose in-order traversal is the sequence
itself and whose values satisfy the min-heap property. It is built in
linear time from the left/right neighbor arrays: each index hangs off
whichever of its two nearest smaller values is larger (the closer
floor), indices with one neighbor hang off that one, and the index with
neither is the root.

The tree is stored as parallel parent/left_child/right_child index
arrays; a child smaller than its parent index is the left child, which
is forced by the in-order property.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .ansv import left_neighbors, right_neighbors
from .errors import DuplicateValuesError, MalformedTreeError
from .instrument import Tally

__all__ = [
    "CartesianTree",
    "TreeReport",
    "build_tree",
    "check_tree",
    "in_order",
    "oracle_tree",
]


@dataclass(frozen=True)
class CartesianTree:
    """Binary tree over sequence indices as parent/child arrays."""

    parent: tuple[Optional[int], ...]
    left_child: tuple[Optional[int], ...]
    right_child: tuple[Optional[int], ...]
    root: Optional[int]


def _require_distinct(s: Sequence[int]) -> None:
    if len(set(s)) != len(s):
        raise DuplicateValuesError("sequence values must be distinct")


def _links_from_parent(
    parent: list[Optional[int]], root: Optional[int]
) -> CartesianTree:
    n = len(parent)
    left_child: list[Optional[int]] = [None] * n
    right_child: list[Optional[int]] = [None] * n
    for x in range(n):
        p = parent[x]
        if p is None:
            continue
        if x < p:
            left_child[p] = x
        else:
            right_child[p] = x
    return CartesianTree(tuple(parent), tuple(left_child), tuple(right_child), root)


def build_tree(s: Sequence[int], tally: Optional[Tally] = None) -> CartesianTree:
    """Build the Cartesian tree of a distinct-valued sequence.

    Parent rule per index x: the left neighbor if x has no right
    neighbor, the right neighbor if it has no left one, the neighbor
    with the LARGER value when both exist, and root when neither does.
    Runs in O(n); the two neighbor scans contribute at most 2n pops
    (counted into ``tally`` when given).
    """
    _require_distinct(s)
    n = len(s)
    left = left_neighbors(s, tally).neighbors
    right = right_neighbors(s, tally).neighbors
    parent: list[Optional[int]] = [None] * n
    root: Optional[int] = None
    for x in range(n):
        l, r = left[x], right[x]
        if l is None and r is None:
            root = x
        elif r is None:
            parent[x] = l
        elif l is None:
            parent[x] = r
        else:
            parent[x] = l if s[l] > s[r] else r
    return _links_from_parent(parent, root)


def in_order(t: CartesianTree) -> list[int]:
    """Symmetric traversal emitting node indices.

    Iterative so degenerate chains cannot overflow the call stack.
    Raises MalformedTreeError on cycles, out-of-range links, or nodes
    unreachable from the root (detected by visit counting).
    """
    n = len(t.parent)
    if n == 0:
        if t.root is not None:
            raise MalformedTreeError("empty tree cannot have a root")
        return []
    root = t.root
    if root is None or not 0 <= root < n:
        raise MalformedTreeError("missing or out-of-range root")
    order: list[int] = []
    stack: list[int] = []
    node: Optional[int] = root
    while stack or node is not None:
        while node is not None:
            stack.append(node)
            if len(stack) > n:
                raise MalformedTreeError("cycle through left children")
            nxt = t.left_child[node]
            if nxt is not None and not 0 <= nxt < n:
                raise MalformedTreeError(f"left child of {node} out of range")
            node = nxt
        node = stack.pop()
        order.append(node)
        if len(order) > n:
            raise MalformedTreeError("cycle: more visits than nodes")
        nxt = t.right_child[node]
        if nxt is not None and not 0 <= nxt < n:
            raise MalformedTreeError(f"right child of {node} out of range")
        node = nxt
    if len(order) != n or len(set(order)) != n:
        raise MalformedTreeError("traversal did not visit every node exactly once")
    return order


@dataclass(frozen=True)
class TreeReport:
    """Outcome of the three Cartesian-tree checks."""

    binary_ok: bool
    heap_ok: bool
    traversal_ok: bool

    def all_ok(self) -> bool:
        return self.binary_ok and self.heap_ok and self.traversal_ok


def _structure_ok(n: int, t: CartesianTree) -> bool:
    if not (len(t.parent) == len(t.left_child) == len(t.right_child) == n):
        return False
    if n == 0:
        return t.root is None
    roots = [x for x in range(n) if t.parent[x] is None]
    if len(roots) != 1 or t.root != roots[0]:
        return False
    # Child links must be exactly the inverse of parent links.
    for x in range(n):
        p = t.parent[x]
        if p is None:
            continue
        if not 0 <= p < n or p == x:
            return False
        if x < p and t.left_child[p] != x:
            return False
        if x > p and t.right_child[p] != x:
            return False
    for p in range(n):
        for child, side in ((t.left_child[p], -1), (t.right_child[p], 1)):
            if child is None:
                continue
            if not 0 <= child < n or t.parent[child] != p:
                return False
            if (child - p) * side < 0:
                return False
    # Acyclicity: every node must reach the root.
    state = [0] * n  # 0 unknown, 1 on current path, 2 reaches root
    for x in range(n):
        path = []
        y: Optional[int] = x
        while y is not None and state[y] == 0:
            state[y] = 1
            path.append(y)
            y = t.parent[y]
        # y is None (reached the root), 2 (known good), or 1 (a cycle).
        ok = y is None or state[y] == 2
        for z in path:
            state[z] = 2 if ok else 1
        if not ok:
            return False
    return True


def check_tree(s: Sequence[int], t: CartesianTree) -> TreeReport:
    """Evaluate the binary / heap / traversal properties of ``t``.

    binary_ok: well-formed binary tree with one node per index;
    heap_ok: every non-root value exceeds its parent's value;
    traversal_ok: in-order traversal is 0, 1, ..., n-1. Malformed trees
    fail flags instead of raising.
    """
    n = len(s)
    binary_ok = _structure_ok(n, t)

    heap_ok = len(t.parent) == n
    if heap_ok:
        for x in range(n):
            p = t.parent[x]
            if p is None:
                continue
            if not 0 <= p < n or not s[x] > s[p]:
                heap_ok = False
                break

    try:
        traversal_ok = in_order(t) == list(range(n))
    except MalformedTreeError:
        traversal_ok = False

    return TreeReport(binary_ok=binary_ok, heap_ok=heap_ok, traversal_ok=traversal_ok)


def oracle_tree(s: Sequence[int]) -> CartesianTree:
    """Reference tree by recursive minimum splitting.

    The minimum of a range is its subtree root; left and right
    sub-ranges build the subtrees. Independent of the neighbor-array
    path; equals build_tree on every distinct-valued input because the
    Cartesian tree is unique.
    """
    _require_distinct(s)
    n = len(s)
    parent: list[Optional[int]] = [None] * n

    def build(lo: int, hi: int) -> Optional[int]:
        if lo >= hi:
            return None
        m = lo
        for i in range(lo + 1, hi):
            if s[i] < s[m]:
                m = i
        l = build(lo, m)
        r = build(m + 1, hi)
        if l is not None:
            parent[l] = m
        if r is not None:
            parent[r] = m
        return m

    root = build(0, n)
    return _links_from_parent(parent, root)
