"""Dense exact linear algebra over the rationals.

The scalar type is `fractions.Fraction`: arbitrary-precision rationals,
always in lowest terms with positive denominator, so every computation in
this module is exact.  Matrices are immutable, row-major grids of
Fractions sized for small dense problems (dimensions in the tens); there
are no pivoting heuristics and no sparsity machinery on purpose.

Determinism conventions, relied on throughout the package:

* `rref` picks pivots as the leftmost nonzero column, topmost nonzero
  row, so the reduced form and the pivot list are canonical.
* `kernel_basis` enumerates free columns in increasing order and sets the
  free coordinate of each basis vector to 1.
* `solve` returns the particular solution with all free variables zero.

Floats are refused at construction time; the one floating-point helper
lives elsewhere and never feeds back into exact results.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def frac(value: int | str | Fraction) -> Fraction:
    """Coerce an int, a string like '-3/2', or a Fraction to a Fraction.

    Floats are rejected: silent binary-to-rational conversion is how
    inexactness sneaks into an exact pipeline.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("refusing to coerce float %r to an exact rational" % (value,))
    return Fraction(value)


def vec(entries: Iterable[int | str | Fraction]) -> Vector:
    return tuple(frac(x) for x in entries)


def zero_vector(n: int) -> Vector:
    return (_ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    if not 0 <= i < n:
        raise IndexError("unit vector index %d out of range for length %d" % (i, n))
    return tuple(_ONE if j == i else _ZERO for j in range(n))


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c: Fraction, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def is_zero_vector(v: Vector) -> bool:
    return not any(v)


class Matrix:
    """Immutable dense matrix of Fractions.

    `data` is a tuple of row tuples.  An explicit `cols` count is required
    when constructing a matrix with zero rows, since the width cannot be
    inferred.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable[int | str | Fraction]], cols: int | None = None):
        grid = tuple(tuple(frac(x) for x in row) for row in data)
        if grid:
            width = len(grid[0])
            if any(len(row) != width for row in grid):
                raise ValueError("ragged rows in matrix literal")
            if cols is not None and cols != width:
                raise ValueError("declared column count %d does not match rows of width %d" % (cols, width))
            cols = width
        elif cols is None:
            raise ValueError("a matrix with no rows needs an explicit column count")
        self.data: tuple[Vector, ...] = grid
        self.rows: int = len(grid)
        self.cols: int = cols

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)], cols=n)

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix([[_ZERO] * cols for _ in range(rows)], cols=cols)

    @staticmethod
    def from_columns(columns: Sequence[Vector]) -> "Matrix":
        if not columns:
            raise ValueError("from_columns needs at least one column")
        height = len(columns[0])
        return Matrix([[col[i] for col in columns] for i in range(height)], cols=len(columns))

    def entry(self, i: int, j: int) -> Fraction:
        return self.data[i][j]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.data)

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.cols)], cols=self.rows)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError("vector of length %d against %d columns" % (len(v), self.cols))
        out = []
        for row in self.data:
            acc = _ZERO
            for a, x in zip(row, v):
                if a and x:
                    acc += a * x
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch %dx%d @ %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        cols = other.transpose().data
        return Matrix(
            [[sum((a * b for a, b in zip(row, col) if a and b), _ZERO) for col in cols] for row in self.data],
            cols=other.cols,
        )

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matrix) and self.cols == other.cols and self.data == other.data

    def __hash__(self) -> int:
        return hash((self.cols, self.data))

    def __repr__(self) -> str:
        return "Matrix(%d x %d)" % (self.rows, self.cols)

    def pretty(self) -> str:
        cells = [[str(x) for x in row] for row in self.data]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and the tuple of pivot columns.

    Pivot choice is deterministic: leftmost nonzero column, topmost
    nonzero entry at or below the working row.  The result is the
    canonical reduced form, so it is idempotent and unique per row space.
    """
    a = [list(row) for row in m.data]
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = None
        for i in range(r, nrows):
            if a[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        p = a[r][c]
        if p != 1:
            inv = _ONE / p
            a[r] = [x * inv for x in a[r]]
        prow = a[r]
        for i in range(nrows):
            if i != r:
                f = a[i][c]
                if f:
                    a[i] = [x - f * y for x, y in zip(a[i], prow)]
        pivots.append(c)
        r += 1
    return Matrix(a, cols=ncols), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> tuple[Vector, ...]:
    """Basis of the right null space {v : m v = 0}.

    Free columns are enumerated in increasing order; each basis vector has
    a 1 in its free coordinate and zeros in the other free coordinates,
    which makes the basis canonical for a given matrix.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [_ZERO] * m.cols
        v[free] = _ONE
        for row_index, p in enumerate(pivots):
            v[p] = -reduced.data[row_index][free]
        basis.append(tuple(v))
    return tuple(basis)


def solve(m: Matrix, rhs: Sequence[Fraction]) -> Vector | None:
    """One solution of m x = rhs with all free variables zero, or None.

    None signals an inconsistent system.  When the system is consistent
    the returned solution is canonical (free coordinates zero).
    """
    if len(rhs) != m.rows:
        raise ValueError("rhs of length %d against %d rows" % (len(rhs), m.rows))
    augmented = Matrix([list(row) + [b] for row, b in zip(m.data, rhs)], cols=m.cols + 1)
    reduced, pivots = rref(augmented)
    if m.cols in pivots:
        return None
    x = [_ZERO] * m.cols
    for row_index, p in enumerate(pivots):
        x[p] = reduced.data[row_index][m.cols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix | None:
    """Inverse of a square matrix, or None when singular."""
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square %dx%d matrix" % (m.rows, m.cols))
    n = m.rows
    augmented = Matrix(
        [list(row) + [_ONE if i == j else _ZERO for j in range(n)] for i, row in enumerate(m.data)],
        cols=2 * n,
    )
    reduced, pivots = rref(augmented)
    if tuple(pivots[:n]) != tuple(range(n)):
        return None
    return Matrix([row[n:] for row in reduced.data], cols=n)


def integer_grid(m: Matrix) -> list[list[int]] | None:
    """The entries as plain ints when every denominator is 1, else None.

    Fast-path probe: rank computations over pure-integer matrices can use
    fraction-free elimination, which is much cheaper than Fraction rref.
    """
    grid = []
    for row in m.data:
        out = []
        for x in row:
            if x.denominator != 1:
                return None
            out.append(x.numerator)
        grid.append(out)
    return grid


def integer_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    """Product of integer grids (a is r x n, b is n x c)."""
    rows_b = len(b)
    cols_b = len(b[0]) if b else 0
    result = []
    for row in a:
        acc = [0] * cols_b
        for idx in range(rows_b):
            f = row[idx]
            if f:
                brow = b[idx]
                for j in range(cols_b):
                    if brow[j]:
                        acc[j] += f * brow[j]
        result.append(acc)
    return result


def integer_rank(grid: Sequence[Sequence[int]], cols: int) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    Every row below the pivot is updated with the one-step Bareiss rule,
    including rows with a zero in the pivot column: that scaling is what
    keeps every later division by the previous pivot exact.  Agrees with
    rank(Matrix(...)) on all inputs; exercised against it in the tests.
    """
    m = [list(row) for row in grid if any(row)]
    if not m:
        return 0
    r = 0
    prev = 1
    for c in range(cols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        piv = m[r][c]
        top = m[r]
        for i in range(r + 1, len(m)):
            cur = m[i]
            f = cur[c]
            for j in range(c + 1, cols):
                cur[j] = (piv * cur[j] - f * top[j]) // prev
            cur[c] = 0
        prev = piv
        r += 1
        if r == len(m):
            break
    return r
