"""Exact sparse linear algebra over QQ.

Thin layer over sympy's ``DomainMatrix`` that keeps every matrix in the sparse
(SDM) format, converts to and from ``Fraction`` at the edges, and guards the
zero-size shapes that weight blocks produce all the time.
"""

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

Scalar = Fraction | int


def to_qq(value: Scalar) -> object:
    """Convert a Fraction or int into an element of QQ."""
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(element: object) -> Fraction:
    """Convert an element of QQ back into a Fraction."""
    return Fraction(int(element.numerator), int(element.denominator))  # type: ignore[attr-defined]


def zeros(rows: int, cols: int) -> DomainMatrix:
    return DomainMatrix.zeros((rows, cols), QQ)


def identity(n: int) -> DomainMatrix:
    if n == 0:
        return zeros(0, 0)
    return DomainMatrix.eye(n, QQ).to_sparse()


def from_entries(entries: Mapping[tuple[int, int], Scalar], rows: int, cols: int) -> DomainMatrix:
    """Build a sparse matrix from a dictionary of keys, dropping zeros."""
    dok = {key: to_qq(value) for key, value in entries.items() if value != 0}
    return DomainMatrix.from_dok(dok, (rows, cols), QQ)


def from_rows(rows: Sequence[Sequence[Scalar]], cols: int | None = None) -> DomainMatrix:
    """Build a matrix from nested row lists; ``cols`` is needed when there are no rows."""
    ncols = len(rows[0]) if rows else (cols or 0)
    entries = {(i, j): value for i, row in enumerate(rows) for j, value in enumerate(row)}
    return from_entries(entries, len(rows), ncols)


def column(values: Sequence[Scalar]) -> DomainMatrix:
    return from_entries({(i, 0): v for i, v in enumerate(values)}, len(values), 1)


def entries(matrix: DomainMatrix) -> dict[tuple[int, int], Fraction]:
    return {key: from_qq(value) for key, value in matrix.to_sparse().to_dok().items() if value}


def to_rows(matrix: DomainMatrix) -> list[list[Fraction]]:
    rows, cols = matrix.shape
    table = [[Fraction(0)] * cols for _ in range(rows)]
    for (i, j), value in entries(matrix).items():
        table[i][j] = value
    return table


def entry(matrix: DomainMatrix, i: int, j: int) -> Fraction:
    return entries(matrix).get((i, j), Fraction(0))


def _has_zero_dim(matrix: DomainMatrix) -> bool:
    return 0 in matrix.shape


def matmul(*matrices: DomainMatrix) -> DomainMatrix:
    """Multiply left to right; shapes are checked even when a dimension is zero."""
    result = matrices[0]
    for right in matrices[1:]:
        if result.shape[1] != right.shape[0]:
            raise ValueError(f"shape mismatch {result.shape} @ {right.shape}")
        if _has_zero_dim(result) or _has_zero_dim(right):
            result = zeros(result.shape[0], right.shape[1])
        else:
            result = result.to_sparse().matmul(right.to_sparse())
    return result


def add(left: DomainMatrix, right: DomainMatrix) -> DomainMatrix:
    if left.shape != right.shape:
        raise ValueError(f"shape mismatch {left.shape} + {right.shape}")
    if _has_zero_dim(left):
        return left
    return left.to_sparse().add(right.to_sparse())


def sub(left: DomainMatrix, right: DomainMatrix) -> DomainMatrix:
    return add(left, scale(right, -1))


def scale(matrix: DomainMatrix, factor: Scalar) -> DomainMatrix:
    if _has_zero_dim(matrix):
        return matrix
    return matrix.to_sparse().scalarmul(to_qq(factor))


def transpose(matrix: DomainMatrix) -> DomainMatrix:
    if _has_zero_dim(matrix):
        return zeros(matrix.shape[1], matrix.shape[0])
    return matrix.to_sparse().transpose()


def is_zero(matrix: DomainMatrix) -> bool:
    return _has_zero_dim(matrix) or bool(matrix.to_sparse().is_zero_matrix)


def equal(left: DomainMatrix, right: DomainMatrix) -> bool:
    return left.shape == right.shape and is_zero(sub(left, right))


def rref(matrix: DomainMatrix) -> tuple[DomainMatrix, tuple[int, ...]]:
    """Reduced row echelon form with pivot columns (Gauss-Jordan, leftmost pivots)."""
    if _has_zero_dim(matrix):
        return matrix, ()
    reduced, pivots = matrix.to_sparse().rref()
    return reduced, tuple(pivots)


def rank(matrix: DomainMatrix) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix: DomainMatrix) -> DomainMatrix:
    """Kernel basis as the columns of an ``n x k`` matrix, one column per free variable."""
    rows, cols = matrix.shape
    if rows == 0:
        return identity(cols)
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    free = [j for j in range(cols) if j not in pivot_set]
    reduced_entries = entries(reduced)
    basis: dict[tuple[int, int], Fraction] = {}
    for k, free_col in enumerate(free):
        basis[(free_col, k)] = Fraction(1)
        for row, pivot_col in enumerate(pivots):
            value = reduced_entries.get((row, free_col))
            if value:
                basis[(pivot_col, k)] = -value
    return from_entries(basis, cols, len(free))


def try_inverse(matrix: DomainMatrix) -> DomainMatrix | None:
    """Inverse of a square matrix, or None when it is singular or not square."""
    rows, cols = matrix.shape
    if rows != cols:
        return None
    if rows == 0:
        return matrix
    if rank(matrix) < rows:
        return None
    try:
        return matrix.to_sparse().inv().to_sparse()
    except (DMNonInvertibleMatrixError, ZeroDivisionError):
        return None


def hstack(matrices: Sequence[DomainMatrix], rows: int) -> DomainMatrix:
    """Concatenate columns; ``rows`` fixes the height when the list is empty."""
    builder = DokBuilder()
    offset = 0
    for block in matrices:
        if block.shape[0] != rows:
            raise ValueError(f"row mismatch {block.shape[0]} != {rows}")
        builder.add_block(0, offset, block)
        offset += block.shape[1]
    return builder.build(rows, offset)


def extract(matrix: DomainMatrix, rows: Sequence[int], cols: Sequence[int]) -> DomainMatrix:
    row_index = {r: i for i, r in enumerate(rows)}
    col_index = {c: j for j, c in enumerate(cols)}
    picked = {
        (row_index[i], col_index[j]): value
        for (i, j), value in entries(matrix).items()
        if i in row_index and j in col_index
    }
    return from_entries(picked, len(rows), len(cols))


def independent_modulo(span: DomainMatrix, vectors: DomainMatrix) -> list[int]:
    """Indices of the columns of ``vectors`` forming a basis modulo the column span of ``span``.

    Columns of ``span`` come first in the elimination, so the pivots that land on
    ``vectors`` are exactly a complement of ``span`` inside ``span + vectors``.
    """
    offset = span.shape[1]
    stacked = hstack([span, vectors], span.shape[0])
    return [p - offset for p in rref(stacked)[1] if p >= offset]


class DokBuilder:
    """Accumulates entries of a large sparse matrix assembled from blocks."""

    def __init__(self) -> None:
        self.entries: dict[tuple[int, int], Fraction] = {}

    def add(self, row: int, col: int, value: Scalar) -> None:
        if value:
            key = (row, col)
            total = self.entries.get(key, Fraction(0)) + value
            if total:
                self.entries[key] = total
            else:
                self.entries.pop(key, None)

    def add_block(
        self, row_offset: int, col_offset: int, block: DomainMatrix, factor: Scalar = 1
    ) -> None:
        if factor == 0:
            return
        for (i, j), value in entries(block).items():
            self.add(row_offset + i, col_offset + j, value * factor)

    def build(self, rows: int, cols: int) -> DomainMatrix:
        return from_entries(self.entries, rows, cols)


def combine(terms: Iterable[tuple[Scalar, DomainMatrix]], rows: int, cols: int) -> DomainMatrix:
    """Linear combination of equally shaped matrices."""
    builder = DokBuilder()
    for factor, matrix in terms:
        if matrix.shape != (rows, cols):
            raise ValueError(f"shape mismatch {matrix.shape} != {(rows, cols)}")
        builder.add_block(0, 0, matrix, factor)
    return builder.build(rows, cols)
