"""COO sparse matrices and sequential vector-matrix multiplication.

A sparse matrix is a strictly (row, column)-sorted list of nonzero
triplets. Row/column indices are 1-based at the construction and file
boundary, 0-based internally. The product is vector-times-matrix:
``y[c] = sum over rows r of x[r] * m[r][c]``, computed by touching only
the stored triplets.

All arithmetic is exact 64-bit signed: any intermediate product or sum
outside [-2^63, 2^63 - 1] raises OverflowError instead of wrapping.
Exact integers keep every evaluation order bit-identical, which is what
makes the parallel equivalence checks in ``parallel`` decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import BoundsError, DimensionError, OrderError, ZeroEntryError
from .instrument import Tally

__all__ = [
    "INT64_MAX",
    "INT64_MIN",
    "CooMatrix",
    "DenseMatrix",
    "coo_from_text",
    "coo_from_triplets",
    "coo_to_text",
    "dense_from_rows",
    "from_dense",
    "multiply_seq",
    "oracle_multiply_dense",
    "to_dense",
]

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


def _check64(v: int, what: str) -> int:
    if not INT64_MIN <= v <= INT64_MAX:
        raise OverflowError(f"{what} {v} outside signed 64-bit range")
    return v


@dataclass(frozen=True)
class CooMatrix:
    """Validated sparse matrix; ``entries`` are 0-based (r, c, v)."""

    rows: int
    cols: int
    entries: tuple[tuple[int, int, int], ...]

    def to_triplets(self) -> list[tuple[int, int, int]]:
        """Entries in the 1-based boundary convention."""
        return [(r + 1, c + 1, v) for r, c, v in self.entries]


@dataclass(frozen=True)
class DenseMatrix:
    """Explicit rows-by-cols grid, zeros included."""

    rows: int
    cols: int
    cells: tuple[tuple[int, ...], ...]


def coo_from_triplets(
    rows: int, cols: int, triplets: Iterable[tuple[int, int, int]]
) -> CooMatrix:
    """Validate 1-based triplets and build a CooMatrix.

    Triplets must be strictly sorted by (row, column), which also rules
    out duplicates, with in-range indices and nonzero 64-bit values.
    """
    if rows < 1 or cols < 1:
        raise DimensionError(f"matrix dimensions must be positive, got {rows}x{cols}")
    entries: list[tuple[int, int, int]] = []
    prev: Optional[tuple[int, int]] = None
    for r, c, v in triplets:
        if not (1 <= r <= rows and 1 <= c <= cols):
            raise BoundsError(f"triplet ({r},{c}) outside 1..{rows} x 1..{cols}")
        if v == 0:
            raise ZeroEntryError(f"triplet ({r},{c}) stores an explicit zero")
        _check64(v, "triplet value")
        if prev is not None and (r, c) <= prev:
            raise OrderError(
                f"triplet ({r},{c}) not strictly after ({prev[0]},{prev[1]})"
            )
        prev = (r, c)
        entries.append((r - 1, c - 1, v))
    return CooMatrix(rows, cols, tuple(entries))


def dense_from_rows(rows_of_values: Sequence[Sequence[int]]) -> DenseMatrix:
    """Build a DenseMatrix from a nonempty rectangular grid."""
    r = len(rows_of_values)
    if r < 1:
        raise DimensionError("dense matrix needs at least one row")
    c = len(rows_of_values[0])
    if c < 1:
        raise DimensionError("dense matrix needs at least one column")
    for row in rows_of_values:
        if len(row) != c:
            raise DimensionError("dense matrix rows must have equal length")
        for v in row:
            _check64(v, "dense cell")
    return DenseMatrix(r, c, tuple(tuple(row) for row in rows_of_values))


def to_dense(m: CooMatrix) -> DenseMatrix:
    """Expand a sparse matrix to its explicit grid."""
    grid = [[0] * m.cols for _ in range(m.rows)]
    for r, c, v in m.entries:
        grid[r][c] = v
    return DenseMatrix(m.rows, m.cols, tuple(tuple(row) for row in grid))


def from_dense(d: DenseMatrix) -> CooMatrix:
    """Collect nonzero cells of a grid; inverse of ``to_dense``."""
    entries = [
        (r, c, d.cells[r][c])
        for r in range(d.rows)
        for c in range(d.cols)
        if d.cells[r][c] != 0
    ]
    return CooMatrix(d.rows, d.cols, tuple(entries))


def multiply_seq(
    x: Sequence[int], m: CooMatrix, tally: Optional[Tally] = None
) -> list[int]:
    """Multiply vector ``x`` (length R) with ``m``; returns y of length C.

    One accumulation per stored triplet, so element operations are at
    most ``len(entries) + C`` (counted into ``tally.element_ops``).
    """
    if len(x) != m.rows:
        raise DimensionError(f"vector length {len(x)} != matrix rows {m.rows}")
    y = [0] * m.cols
    ops = m.cols
    for r, c, v in m.entries:
        p = x[r] * v
        if not INT64_MIN <= p <= INT64_MAX:
            raise OverflowError(f"product at ({r + 1},{c + 1}) overflows 64 bits")
        t = y[c] + p
        if not INT64_MIN <= t <= INT64_MAX:
            raise OverflowError(f"sum at column {c + 1} overflows 64 bits")
        y[c] = t
        ops += 1
    if tally is not None:
        tally.element_ops += ops
    return y


def oracle_multiply_dense(x: Sequence[int], d: DenseMatrix) -> list[int]:
    """Textbook reference product: y_i = sum_k x[k] * d[k][i].

    Iterates the full grid including zeros; shares nothing with the
    sparse code path.
    """
    if len(x) != d.rows:
        raise DimensionError(f"vector length {len(x)} != matrix rows {d.rows}")
    y = []
    for i in range(d.cols):
        acc = 0
        for k in range(d.rows):
            p = x[k] * d.cells[k][i]
            if not INT64_MIN <= p <= INT64_MAX:
                raise OverflowError(f"product at ({k + 1},{i + 1}) overflows 64 bits")
            acc += p
            if not INT64_MIN <= acc <= INT64_MAX:
                raise OverflowError(f"sum at column {i + 1} overflows 64 bits")
        y.append(acc)
    return y


def coo_from_text(text: str) -> CooMatrix:
    """Parse the COO file format: header ``R C NNZ``, then NNZ ``r c v`` lines.

    Tokens are ASCII decimals separated by arbitrary whitespace; the
    triplets must already be sorted. Raises kit errors naming the
    violated rule.
    """
    tokens = text.split()
    if len(tokens) < 3:
        raise OrderError("header must be three integers: R C NNZ")
    try:
        numbers = [int(t) for t in tokens]
    except ValueError as exc:
        raise OrderError(f"non-integer token in matrix file: {exc}") from None
    rows, cols, nnz = numbers[0], numbers[1], numbers[2]
    if nnz < 0:
        raise OrderError(f"declared triplet count {nnz} is negative")
    body = numbers[3:]
    if len(body) != 3 * nnz:
        raise OrderError(
            f"expected {3 * nnz} integers after the header, found {len(body)}"
        )
    triplets = [(body[i], body[i + 1], body[i + 2]) for i in range(0, len(body), 3)]
    return coo_from_triplets(rows, cols, triplets)


def coo_to_text(m: CooMatrix) -> str:
    """Serialize to the COO file format; inverse of ``coo_from_text``."""
    lines = [f"{m.rows} {m.cols} {len(m.entries)}"]
    lines.extend(f"{r} {c} {v}" for r, c, v in m.to_triplets())
    return "\n".join(lines) + "\n"
