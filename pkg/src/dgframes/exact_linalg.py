"""Exact dense integer matrices, Smith normal form and integer linear solvers.

Everything here runs on Python's arbitrary-precision ints; no floating point
is used anywhere in the package.  Matrices are immutable once constructed, so
they can be shared freely between complexes and maps.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Optional, Sequence

Vector = tuple  # tuple[int, ...], kept loose for 3.10 friendliness


class IntMatrix:
    """A rows x cols matrix of Python ints, stored as a tuple of row tuples.

    The explicit ``rows``/``cols`` fields keep degenerate shapes (0 x n and
    n x 0) well defined; such matrices show up constantly as differentials of
    bounded complexes.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Optional[Iterable[Iterable[int]]] = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = tuple((0,) * cols for _ in range(rows))
        else:
            packed = tuple(tuple(int(v) for v in row) for row in data)
            if len(packed) != rows or any(len(r) != cols for r in packed):
                raise ValueError("matrix data does not match declared shape %dx%d" % (rows, cols))
            self.data = packed

    # -- constructors ----------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        data = [list(r) for r in data]
        if not data:
            return cls(0, 0 if cols is None else cols)
        width = len(data[0]) if cols is None else cols
        return cls(len(data), width, data)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries) -> "IntMatrix":
        """Build from a {(i, j): value} mapping; unspecified entries are 0."""
        grid = [[0] * cols for _ in range(rows)]
        for (i, j), v in entries.items():
            grid[i][j] = grid[i][j] + v
        return cls(rows, cols, grid)

    # -- basic protocol ---------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        return "IntMatrix(%d, %d, %r)" % (self.rows, self.cols, [list(r) for r in self.data])

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.data for v in row)

    def to_lists(self):
        return [list(r) for r in self.data]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(
            self.rows,
            self.cols,
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.data, other.data)),
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(
            self.rows,
            self.cols,
            tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.data, other.data)),
        )

    def __neg__(self) -> "IntMatrix":
        return self.scale(-1)

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(c * v for v in row) for row in self.data))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("cannot multiply %dx%d by %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        bdata = other.data
        width = other.cols
        out = []
        for arow in self.data:
            acc = [0] * width
            for k, v in enumerate(arow):
                if v:
                    brow = bdata[k]
                    for j in range(width):
                        bv = brow[j]
                        if bv:
                            acc[j] += v * bv
            out.append(tuple(acc))
        return IntMatrix(self.rows, width, out)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.data)) if self.data else None)

    def _same_shape(self, other: "IntMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch: %dx%d vs %dx%d" % (self.rows, self.cols, other.rows, other.cols))


def mat_vec(m: IntMatrix, v: Sequence[int]) -> Vector:
    if len(v) != m.cols:
        raise ValueError("vector length %d does not match %d columns" % (len(v), m.cols))
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m.data)


def submatrix(m: IntMatrix, rows: Sequence[int], cols: Sequence[int]) -> IntMatrix:
    """The submatrix on the given row and column indices, in the given order."""
    return IntMatrix(len(rows), len(cols), [[m.data[i][j] for j in cols] for i in rows])


def block(grid: Sequence[Sequence[IntMatrix]]) -> IntMatrix:
    """Assemble a block matrix from a rectangular grid of blocks.

    Blocks in the same grid row must agree in row count, blocks in the same
    grid column in column count; zero-sized blocks are fine.
    """
    if not grid:
        return IntMatrix(0, 0)
    row_heights = [r[0].rows for r in grid]
    col_widths = [b.cols for b in grid[0]]
    for r in grid:
        if len(r) != len(col_widths):
            raise ValueError("ragged block grid")
        for b, w in zip(r, col_widths):
            if b.cols != w or b.rows != r[0].rows:
                raise ValueError("inconsistent block shapes")
    out = []
    for r in grid:
        for i in range(r[0].rows):
            row: list = []
            for b in r:
                row.extend(b.data[i])
            out.append(tuple(row))
    return IntMatrix(sum(row_heights), sum(col_widths), out)


class SNFResult(NamedTuple):
    s: IntMatrix
    u: IntMatrix
    v: IntMatrix


def _row_swap(a, i, j):
    a[i], a[j] = a[j], a[i]


def _col_swap(a, i, j):
    for row in a:
        row[i], row[j] = row[j], row[i]


def _row_sub(a, i, j, q):
    """row_i -= q * row_j"""
    ri, rj = a[i], a[j]
    for k in range(len(ri)):
        ri[k] -= q * rj[k]


def _col_sub(a, i, j, q):
    """col_i -= q * col_j"""
    for row in a:
        row[i] -= q * row[j]


def snf(m: IntMatrix) -> SNFResult:
    """Smith normal form: returns (s, u, v) with u @ m @ v == s.

    ``s`` is diagonal with nonnegative entries d_1 | d_2 | ... and ``u``, ``v``
    are unimodular.  Pivot selection is deterministic: among the remaining
    submatrix, the entry of smallest nonzero absolute value, ties broken by
    lowest row index, then lowest column index.
    """
    nr, nc = m.rows, m.cols
    a = [list(row) for row in m.data]
    u = [list(row) for row in IntMatrix.identity(nr).data]
    v = [list(row) for row in IntMatrix.identity(nc).data]

    t = 0
    while t < min(nr, nc):
        # deterministic pivot hunt over the trailing submatrix
        pivot = None
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                val = abs(a[i][j])
                if val and (best is None or val < best):
                    best = val
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            _row_swap(a, pi, t)
            _row_swap(u, pi, t)
        if pj != t:
            _col_swap(a, pj, t)
            _col_swap(v, pj, t)

        while True:
            # clear the pivot column; nonzero remainders are strictly smaller
            # than the pivot, so swapping them up makes progress
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        _row_sub(a, i, t, q)
                        _row_sub(u, i, t, q)
                    if a[i][t]:
                        _row_swap(a, i, t)
                        _row_swap(u, i, t)
                        dirty = True
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        _col_sub(a, j, t, q)
                        _col_sub(v, j, t, q)
                    if a[t][j]:
                        _col_swap(a, j, t)
                        _col_swap(v, j, t)
                        dirty = True
            if dirty:
                continue
            if any(a[i][t] for i in range(t + 1, nr)) or any(a[t][j] for j in range(t + 1, nc)):
                continue
            # row and column are clear; enforce the divisibility chain
            offender = None
            d = a[t][t]
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % d:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _row_sub(a, t, offender, -1)  # add the offending row to the pivot row
            _row_sub(u, t, offender, -1)
        if a[t][t] < 0:
            for k in range(nc):
                a[t][k] = -a[t][k]
            for k in range(nr):
                u[t][k] = -u[t][k]
        t += 1

    return SNFResult(IntMatrix(nr, nc, a), IntMatrix(nr, nr, u), IntMatrix(nc, nc, v))


def rank(m: IntMatrix) -> int:
    s = snf(m).s
    return sum(1 for i in range(min(m.rows, m.cols)) if s[i, i])


def invariant_factors(m: IntMatrix) -> Vector:
    """The nonzero diagonal of the Smith form, in divisibility order."""
    s = snf(m).s
    return tuple(s[i, i] for i in range(min(m.rows, m.cols)) if s[i, i])


def solve(m: IntMatrix, b: Sequence[int]) -> Optional[Vector]:
    """One integer solution x of m @ x = b, or None if there is none.

    The solution is deterministic: it is the back-substitution through the
    Smith decomposition with every free parameter set to zero.
    """
    if len(b) != m.rows:
        raise ValueError("right-hand side length %d does not match %d rows" % (len(b), m.rows))
    s, u, v = snf(m)
    c = mat_vec(u, b)
    y = [0] * m.cols
    r = min(m.rows, m.cols)
    for i in range(r):
        d = s[i, i]
        if d:
            q, rem = divmod(c[i], d)
            if rem:
                return None
            y[i] = q
        elif c[i]:
            return None
    for i in range(r, m.rows):
        if c[i]:
            return None
    return mat_vec(v, y)


def kernel_basis(m: IntMatrix) -> list:
    """A basis of the lattice of integer solutions of m @ x = 0.

    The columns of v matched with zero diagonal entries of the Smith form are
    a basis of the full kernel lattice (not merely a finite-index sublattice),
    since v is unimodular.
    """
    s, _u, v = snf(m)
    r = sum(1 for i in range(min(m.rows, m.cols)) if s[i, i])
    return [tuple(v[i, j] for i in range(m.cols)) for j in range(r, m.cols)]


def det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a nonsquare matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_unimodular(m: IntMatrix) -> bool:
    return m.rows == m.cols and det(m) in (1, -1)
