"""Concurrent sparse multiplication and an interleaving explorer.

Two verification layers for the same loop:

* ``multiply_parallel`` runs real threads under pluggable work
  allocation policies. Workers share the read-only inputs, accumulate
  into private partial vectors, and a join barrier precedes a merge in
  worker-id order, so the result is race-free by construction and
  bit-identical to the sequential product.

* ``build_model``/``explore`` abstract the loop body ``y[c] += x[r]*v``
  into atomic actions and enumerate every interleaving of a small
  instance, reporting all reachable terminal outputs, deadlocks, and
  whether the terminal set collapses to the sequential result. The
  ``none_split_rw`` mode splits each update into a read action and a
  write action using the stale read, which lets the explorer exhibit
  lost updates instead of merely asserting their absence.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ConfigError, DimensionError, ModelTooLargeError
from .spmv import INT64_MAX, INT64_MIN, CooMatrix, multiply_seq

__all__ = [
    "SYNC_MODES",
    "AllocationPlan",
    "AllocationPolicy",
    "ExplorationReport",
    "StealProtocol",
    "TransitionSystem",
    "build_model",
    "explore",
    "multiply_parallel",
    "plan_allocation",
]

SYNC_MODES = ("atomic_rmw", "lock_per_cell", "none_split_rw")

# Action opcodes for the explorer.
_ADD, _ACQUIRE, _RELEASE, _READ, _WRITE = range(5)


@dataclass(frozen=True)
class AllocationPolicy:
    """How triplet indices are assigned to workers."""

    kind: str  # "per_element", "static_chunks", or "dynamic_stealing"
    workers: Optional[int] = None

    @classmethod
    def per_element(cls) -> "AllocationPolicy":
        return cls("per_element")

    @classmethod
    def static_chunks(cls, workers: int) -> "AllocationPolicy":
        return cls("static_chunks", workers)

    @classmethod
    def dynamic_stealing(cls, workers: int) -> "AllocationPolicy":
        return cls("dynamic_stealing", workers)


@dataclass(frozen=True)
class StealProtocol:
    """Plan-level description of the stealing discipline."""

    granularity: int
    victim: str


@dataclass(frozen=True)
class AllocationPlan:
    """Partition of triplet indices, one set per worker.

    ``steal`` is present only for dynamic_stealing: the assignments are
    then the initial partition and the protocol describes how idle
    workers rebalance (granularity 1, always from the worker with the
    most remaining items).
    """

    assignments: tuple[frozenset[int], ...]
    steal: Optional[StealProtocol] = None


def _chunk_sets(nnz: int, workers: int) -> tuple[frozenset[int], ...]:
    q, rem = divmod(nnz, workers)
    sets = []
    start = 0
    for w in range(workers):
        size = q + 1 if w < rem else q
        sets.append(frozenset(range(start, start + size)))
        start += size
    return tuple(sets)


def plan_allocation(policy: AllocationPolicy, nnz: int) -> AllocationPlan:
    """Partition {0..nnz-1} according to the policy.

    per_element: nnz singletons. static_chunks: contiguous ranges whose
    sizes differ by at most one; surplus workers get empty sets.
    dynamic_stealing: the static partition as a starting point plus a
    steal protocol descriptor.
    """
    if nnz < 0:
        raise ConfigError(f"triplet count must be nonnegative, got {nnz}")
    if policy.kind == "per_element":
        return AllocationPlan(tuple(frozenset((i,)) for i in range(nnz)))
    if policy.kind not in ("static_chunks", "dynamic_stealing"):
        raise ConfigError(f"unknown allocation policy kind {policy.kind!r}")
    workers = policy.workers
    if workers is None or workers < 1:
        raise ConfigError(f"{policy.kind} needs at least one worker, got {workers}")
    sets = _chunk_sets(nnz, workers)
    if policy.kind == "dynamic_stealing":
        return AllocationPlan(sets, StealProtocol(granularity=1, victim="max_remaining"))
    return AllocationPlan(sets)


def _accumulate(
    partial: list[int], x: Sequence[int], entry: tuple[int, int, int]
) -> None:
    r, c, v = entry
    p = x[r] * v
    if not INT64_MIN <= p <= INT64_MAX:
        raise OverflowError(f"product at ({r + 1},{c + 1}) overflows 64 bits")
    t = partial[c] + p
    if not INT64_MIN <= t <= INT64_MAX:
        raise OverflowError(f"partial sum at column {c + 1} overflows 64 bits")
    partial[c] = t


class _ClaimCounter:
    """Shared index dispenser; every index is claimed exactly once."""

    def __init__(self) -> None:
        self._next = 0
        self._lock = threading.Lock()

    def claim(self) -> int:
        with self._lock:
            i = self._next
            self._next += 1
            return i


def multiply_parallel(
    x: Sequence[int], m: CooMatrix, policy: AllocationPolicy
) -> list[int]:
    """Multiply with real threads; equals multiply_seq on every schedule.

    Each worker accumulates into a private length-C vector; after all
    workers join, partials are merged in worker-id order. Dynamic
    stealing runs ``policy.workers`` threads that claim one triplet at a
    time from a shared counter.
    """
    if len(x) != m.rows:
        raise DimensionError(f"vector length {len(x)} != matrix rows {m.rows}")
    entries = m.entries
    nnz = len(entries)

    if policy.kind == "dynamic_stealing":
        workers = policy.workers
        if workers is None or workers < 1:
            raise ConfigError(f"dynamic_stealing needs at least one worker, got {workers}")
        partials = [[0] * m.cols for _ in range(workers)]
        counter = _ClaimCounter()
        failures: list[Optional[BaseException]] = [None] * workers

        def run_stealing(wid: int) -> None:
            partial = partials[wid]
            try:
                while True:
                    i = counter.claim()
                    if i >= nnz:
                        return
                    _accumulate(partial, x, entries[i])
            except BaseException as exc:  # propagated after the join
                failures[wid] = exc

        threads = [
            threading.Thread(target=run_stealing, args=(wid,)) for wid in range(workers)
        ]
    else:
        plan = plan_allocation(policy, nnz)
        partials = [[0] * m.cols for _ in range(len(plan.assignments))]
        failures = [None] * len(plan.assignments)

        def run_static(wid: int, indices: list[int]) -> None:
            partial = partials[wid]
            try:
                for i in indices:
                    _accumulate(partial, x, entries[i])
            except BaseException as exc:
                failures[wid] = exc

        threads = [
            threading.Thread(target=run_static, args=(wid, sorted(assignment)))
            for wid, assignment in enumerate(plan.assignments)
        ]

    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for exc in failures:
        if exc is not None:
            raise exc

    y = [0] * m.cols
    for partial in partials:
        for c in range(m.cols):
            t = y[c] + partial[c]
            if not INT64_MIN <= t <= INT64_MAX:
                raise OverflowError(f"merged sum at column {c + 1} overflows 64 bits")
            y[c] = t
    return y


@dataclass(frozen=True)
class TransitionSystem:
    """Per-worker atomic action sequences over a shared output vector."""

    worker_actions: tuple[tuple[tuple[int, int, int], ...], ...]
    cols: int
    sync_mode: str
    sequential_result: tuple[int, ...]


def build_model(
    x: Sequence[int],
    m: CooMatrix,
    workers: int,
    sync_mode: str,
    max_triplets: int = 32,
) -> TransitionSystem:
    """Abstract the multiplication into a transition system.

    Work is split with static_chunks(workers). Action shapes per
    triplet: atomic_rmw -> one add; lock_per_cell -> acquire, add,
    release; none_split_rw -> read into a worker-local temp, then write
    temp + delta (the racy two-step update).
    """
    if sync_mode not in SYNC_MODES:
        raise ConfigError(f"unknown sync mode {sync_mode!r}")
    if workers < 1:
        raise ConfigError(f"need at least one worker, got {workers}")
    if len(x) != m.rows:
        raise DimensionError(f"vector length {len(x)} != matrix rows {m.rows}")
    nnz = len(m.entries)
    if nnz > max_triplets:
        raise ModelTooLargeError(
            f"{nnz} triplets exceed the model cap of {max_triplets}"
        )
    plan = plan_allocation(AllocationPolicy.static_chunks(workers), nnz)
    sequential = tuple(multiply_seq(x, m))

    worker_actions = []
    for assignment in plan.assignments:
        actions: list[tuple[int, int, int]] = []
        for i in sorted(assignment):
            r, c, v = m.entries[i]
            delta = x[r] * v
            if not INT64_MIN <= delta <= INT64_MAX:
                raise OverflowError(f"product at ({r + 1},{c + 1}) overflows 64 bits")
            if sync_mode == "atomic_rmw":
                actions.append((_ADD, c, delta))
            elif sync_mode == "lock_per_cell":
                actions.append((_ACQUIRE, c, 0))
                actions.append((_ADD, c, delta))
                actions.append((_RELEASE, c, 0))
            else:
                actions.append((_READ, c, 0))
                actions.append((_WRITE, c, delta))
        worker_actions.append(tuple(actions))
    return TransitionSystem(tuple(worker_actions), m.cols, sync_mode, sequential)


@dataclass(frozen=True)
class ExplorationReport:
    """Everything the exhaustive interleaving search observed."""

    states_visited: int
    terminal_outputs: frozenset[tuple[int, ...]]
    deadlock_found: bool
    matches_sequential: bool


def explore(ts: TransitionSystem, max_states: int = 1_000_000) -> ExplorationReport:
    """Enumerate every interleaving of the model's atomic actions.

    Depth-first search with visited-state memoization. A state is the
    worker program counters plus the shared cells (plus lock bits and
    worker temps when the mode uses them). Raises ModelTooLargeError
    with partial statistics when more than ``max_states`` states are
    visited.
    """
    actions = ts.worker_actions
    nworkers = len(actions)
    lengths = tuple(len(a) for a in actions)
    use_locks = ts.sync_mode == "lock_per_cell"
    use_temps = ts.sync_mode == "none_split_rw"

    init_pcs = (0,) * nworkers
    init_y = (0,) * ts.cols
    init_locks = (0,) * ts.cols if use_locks else ()
    init_temps = (0,) * nworkers if use_temps else ()
    init = (init_pcs, init_y, init_locks, init_temps)

    visited: set = set()
    terminals: set = set()
    deadlock = False
    stack = [init]
    while stack:
        state = stack.pop()
        if state in visited:
            continue
        visited.add(state)
        if len(visited) > max_states:
            raise ModelTooLargeError(
                f"exploration exceeded {max_states} states",
                states_visited=len(visited),
                terminal_outputs_seen=len(terminals),
            )
        pcs, y, locks, temps = state
        done = True
        enabled_any = False
        for w in range(nworkers):
            pc = pcs[w]
            if pc >= lengths[w]:
                continue
            done = False
            op, cell, delta = actions[w][pc]
            if op == _ACQUIRE and locks[cell]:
                continue  # blocked until the holder releases
            enabled_any = True
            new_pcs = pcs[:w] + (pc + 1,) + pcs[w + 1 :]
            new_y, new_locks, new_temps = y, locks, temps
            if op == _ADD:
                new_y = y[:cell] + (y[cell] + delta,) + y[cell + 1 :]
            elif op == _ACQUIRE:
                new_locks = locks[:cell] + (1,) + locks[cell + 1 :]
            elif op == _RELEASE:
                new_locks = locks[:cell] + (0,) + locks[cell + 1 :]
            elif op == _READ:
                new_temps = temps[:w] + (y[cell],) + temps[w + 1 :]
            else:  # _WRITE: stale read + delta, temp dies afterwards
                new_y = y[:cell] + (temps[w] + delta,) + y[cell + 1 :]
                new_temps = temps[:w] + (0,) + temps[w + 1 :]
            stack.append((new_pcs, new_y, new_locks, new_temps))
        if done:
            terminals.add(y)
        elif not enabled_any:
            deadlock = True

    matches = (not deadlock) and terminals == {ts.sequential_result}
    return ExplorationReport(
        states_visited=len(visited),
        terminal_outputs=frozenset(terminals),
        deadlock_found=deadlock,
        matches_sequential=matches,
    )
