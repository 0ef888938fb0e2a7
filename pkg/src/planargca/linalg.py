"""Exact linear algebra over Gaussian rationals.

Dense matrices are tuples of tuples of scalars; elimination pivots on the
first nonzero entry of each column.  Sizes in this package stay tiny (well
under 50 rows), so clarity wins over asymptotics, and everything is exact.

``SparseEchelon`` keeps an incrementally maintained reduced row echelon form
over integer-indexed columns.  It backs the orbit-closure probes and the
kernel computations, where rows arrive one at a time and most reduce to zero.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .scalars import ONE, ZERO, Scalar

__all__ = [
    "Matrix",
    "SingularMatrix",
    "matrix_solve",
    "matrix_nullspace",
    "determinant",
    "matrix_inverse",
    "SparseEchelon",
]


class SingularMatrix(ValueError):
    """The linear system has no unique solution."""


class Matrix:
    """Dense rectangular matrix of scalars."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[Scalar]]):
        rows = tuple(tuple(row) for row in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("matrix rows must have equal length")
        self.rows = rows

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(
            [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        )

    def mat_vec(self, vec: Sequence[Scalar]) -> List[Scalar]:
        if len(vec) != self.ncols:
            raise ValueError("vector length does not match matrix width")
        return [
            sum((row[j] * vec[j] for j in range(self.ncols)), ZERO)
            for row in self.rows
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self) -> str:
        body = "; ".join(
            ", ".join(str(entry) for entry in row) for row in self.rows
        )
        return f"Matrix([{body}])"


def _rref(rows: List[List[Scalar]]) -> Tuple[List[List[Scalar]], List[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    nrows = len(rows)
    ncols = len(rows[0])
    pivot_cols: List[int] = []
    pivot_row = 0
    for col in range(ncols):
        found = None
        for r in range(pivot_row, nrows):
            if rows[r][col]:
                found = r
                break
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        inv = rows[pivot_row][col].inverse()
        rows[pivot_row] = [entry * inv for entry in rows[pivot_row]]
        for r in range(nrows):
            if r != pivot_row and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [
                    rows[r][j] - factor * rows[pivot_row][j]
                    for j in range(ncols)
                ]
        pivot_cols.append(col)
        pivot_row += 1
        if pivot_row == nrows:
            break
    return rows, pivot_cols


def matrix_solve(matrix: Matrix, rhs: Sequence[Scalar]) -> List[Scalar]:
    """Exact solution of a square system; raises ``SingularMatrix`` otherwise."""
    if matrix.nrows != matrix.ncols:
        raise SingularMatrix("matrix must be square")
    if len(rhs) != matrix.nrows:
        raise ValueError("right-hand side has wrong length")
    augmented = [list(row) + [rhs[i]] for i, row in enumerate(matrix.rows)]
    reduced, pivots = _rref(augmented)
    if len(pivots) != matrix.ncols or matrix.ncols in pivots:
        raise SingularMatrix("no unique solution")
    solution = [ZERO] * matrix.ncols
    for row_index, col in enumerate(pivots):
        solution[col] = reduced[row_index][-1]
    return solution


def matrix_nullspace(matrix: Matrix) -> List[List[Scalar]]:
    """Exact basis of the right kernel; empty list iff the matrix is injective.

    The basis is the canonical one from the reduced row echelon form: one
    vector per free column, with a 1 in that column.
    """
    rows = [list(row) for row in matrix.rows]
    reduced, pivots = _rref(rows)
    pivot_set = set(pivots)
    basis: List[List[Scalar]] = []
    for free in range(matrix.ncols):
        if free in pivot_set:
            continue
        vector = [ZERO] * matrix.ncols
        vector[free] = ONE
        for row_index, col in enumerate(pivots):
            vector[col] = -reduced[row_index][free]
        basis.append(vector)
    return basis


def determinant(matrix: Matrix) -> Scalar:
    """Exact determinant by elimination with row-swap sign tracking."""
    if matrix.nrows != matrix.ncols:
        raise ValueError("determinant requires a square matrix")
    n = matrix.nrows
    rows = [list(row) for row in matrix.rows]
    det = ONE
    for col in range(n):
        found = None
        for r in range(col, n):
            if rows[r][col]:
                found = r
                break
        if found is None:
            return ZERO
        if found != col:
            rows[col], rows[found] = rows[found], rows[col]
            det = -det
        pivot = rows[col][col]
        det = det * pivot
        inv = pivot.inverse()
        for r in range(col + 1, n):
            if rows[r][col]:
                factor = rows[r][col] * inv
                rows[r] = [
                    rows[r][j] - factor * rows[col][j] for j in range(n)
                ]
    return det


def matrix_inverse(matrix: Matrix) -> Matrix:
    if matrix.nrows != matrix.ncols:
        raise SingularMatrix("matrix must be square")
    n = matrix.nrows
    augmented = [
        list(row) + list(Matrix.identity(n).rows[i])
        for i, row in enumerate(matrix.rows)
    ]
    reduced, pivots = _rref(augmented)
    if pivots != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return Matrix([row[n:] for row in reduced])


class SparseEchelon:
    """Incrementally maintained row echelon form over sparse rows.

    Rows are dicts mapping integer column indices to nonzero scalars.  In
    the default echelon mode each stored row is normalized and reduced
    against earlier pivots only, which is enough for span membership and
    dimension and keeps rows sparse.  With ``full_reduce=True`` the stored
    rows stay fully reduced against each other (true reduced echelon form),
    which is what kernel extraction needs.
    """

    def __init__(self, full_reduce: bool = False) -> None:
        self.full_reduce = full_reduce
        self.pivots: Dict[int, Dict[int, Scalar]] = {}

    @property
    def dimension(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Dict[int, Scalar]) -> Dict[int, Scalar]:
        """Remainder of ``row`` after forward elimination by stored rows.

        The remainder is empty exactly when the row lies in the span.  In
        fully reduced mode every pivot column of the remainder is cleared,
        not just the leading ones.
        """
        work = {col: coeff for col, coeff in row.items() if coeff}
        while work:
            lead = min(work)
            pivot_row = self.pivots.get(lead)
            if pivot_row is None:
                break
            factor = work[lead]
            for col, coeff in pivot_row.items():
                updated = work.get(col, ZERO) - factor * coeff
                if updated:
                    work[col] = updated
                else:
                    work.pop(col, None)
        if self.full_reduce and work:
            # Rows here are pairwise fully reduced, so clearing one pivot
            # column never reintroduces another; one pass over the original
            # hits terminates.
            for col in sorted(work):
                coeff = work.get(col)
                if not coeff:
                    continue
                pivot_row = self.pivots.get(col)
                if pivot_row is None:
                    continue
                for other, value in pivot_row.items():
                    updated = work.get(other, ZERO) - coeff * value
                    if updated:
                        work[other] = updated
                    else:
                        work.pop(other, None)
        return work

    def insert(self, row: Dict[int, Scalar]) -> bool:
        """Add ``row`` to the span; returns True if it was independent."""
        remainder = self.reduce(row)
        if not remainder:
            return False
        lead = min(remainder)
        inv = remainder[lead].inverse()
        normalized = {col: coeff * inv for col, coeff in remainder.items()}
        if self.full_reduce:
            # Clear the new pivot column from every stored row.
            for pivot_col, pivot_row in self.pivots.items():
                coeff = pivot_row.get(lead)
                if coeff:
                    for col, value in normalized.items():
                        updated = pivot_row.get(col, ZERO) - coeff * value
                        if updated:
                            pivot_row[col] = updated
                        else:
                            pivot_row.pop(col, None)
        self.pivots[lead] = normalized
        return True

    def contains(self, row: Dict[int, Scalar]) -> bool:
        return not self.reduce(row)

    def kernel_vector_at_first_free_column(
        self, ncols: int
    ) -> Optional[Dict[int, Scalar]]:
        """Kernel vector for the smallest non-pivot column, if any.

        Requires fully reduced mode.  The returned vector has a 1 at the
        free column and is supported only on columns up to it (full
        reduction guarantees nothing later enters).
        """
        if not self.full_reduce:
            raise ValueError("kernel extraction needs full_reduce=True")
        free = None
        for col in range(ncols):
            if col not in self.pivots:
                free = col
                break
        if free is None:
            return None
        vector: Dict[int, Scalar] = {free: ONE}
        for pivot_col, pivot_row in self.pivots.items():
            coeff = pivot_row.get(free)
            if coeff:
                vector[pivot_col] = -coeff
        return vector

    def rows_sorted(self) -> List[Dict[int, Scalar]]:
        return [self.pivots[col] for col in sorted(self.pivots)]
