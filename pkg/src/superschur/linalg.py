"""Dense matrices over the rationals with exact row reduction.

Entries are :class:`fractions.Fraction`. Shapes are stored explicitly so that
matrices with zero rows or zero columns keep their other dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ShapeError

__all__ = ["QMatrix", "to_fraction"]


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point entries are not accepted; use ints, Fractions or 'p/q' strings")
    return Fraction(x)


@dataclass(frozen=True)
class QMatrix:
    nrows: int
    ncols: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise ShapeError(f"row data does not match declared shape {self.nrows}x{self.ncols}")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ncols: int | None = None) -> QMatrix:
        data = tuple(tuple(to_fraction(x) for x in r) for r in rows)
        if ncols is None:
            if not data:
                raise ShapeError("ncols is required for a matrix with no rows")
            ncols = len(data[0])
        return cls(len(data), ncols, data)

    @classmethod
    def from_columns(cls, cols: Iterable[Iterable], nrows: int) -> QMatrix:
        cols = [tuple(to_fraction(x) for x in c) for c in cols]
        if any(len(c) != nrows for c in cols):
            raise ShapeError("column lengths do not match nrows")
        return cls(nrows, len(cols), tuple(tuple(c[i] for c in cols) for i in range(nrows)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> QMatrix:
        z = Fraction(0)
        return cls(nrows, ncols, tuple((z,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> QMatrix:
        one, z = Fraction(1), Fraction(0)
        return cls(n, n, tuple(tuple(one if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def block_diag(cls, a: QMatrix, b: QMatrix) -> QMatrix:
        z = Fraction(0)
        rows = [r + (z,) * b.ncols for r in a.rows] + [(z,) * a.ncols + r for r in b.rows]
        return cls(a.nrows + b.nrows, a.ncols + b.ncols, tuple(rows))

    # -- basic algebra ----------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    @property
    def T(self) -> QMatrix:
        return QMatrix(self.ncols, self.nrows, tuple(zip(*self.rows)) if self.nrows else tuple(() for _ in range(self.ncols)))

    def __matmul__(self, other: QMatrix) -> QMatrix:
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.T.rows
        z = Fraction(0)
        out = []
        for r in self.rows:
            nz = [(k, x) for k, x in enumerate(r) if x]
            out.append(tuple(sum((x * c[k] for k, x in nz), z) for c in cols))
        return QMatrix(self.nrows, other.ncols, tuple(out))

    def __add__(self, other: QMatrix) -> QMatrix:
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return QMatrix(self.nrows, self.ncols, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> QMatrix:
        return self.scale(-1)

    def __sub__(self, other: QMatrix) -> QMatrix:
        return self + (-other)

    def scale(self, c) -> QMatrix:
        c = to_fraction(c)
        return QMatrix(self.nrows, self.ncols, tuple(tuple(c * x for x in r) for r in self.rows))

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        if len(v) != self.ncols:
            raise ShapeError("vector length does not match ncols")
        return tuple(sum((x * y for x, y in zip(r, v) if x), Fraction(0)) for r in self.rows)

    def kron(self, other: QMatrix) -> QMatrix:
        """Kronecker product; row/column pairs ordered lexicographically."""
        rows = []
        for ra in self.rows:
            for rb in other.rows:
                rows.append(tuple(a * b for a in ra for b in rb))
        return QMatrix(self.nrows * other.nrows, self.ncols * other.ncols, tuple(rows))

    def select(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> QMatrix:
        rows = range(self.nrows) if rows is None else rows
        cols = range(self.ncols) if cols is None else cols
        return QMatrix(len(rows), len(cols), tuple(tuple(self.rows[i][j] for j in cols) for i in rows))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def trace(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ShapeError("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    # -- row reduction ----------------------------------------------------

    def rref(self) -> tuple[QMatrix, tuple[int, ...]]:
        """Reduced row echelon form and the pivot columns."""
        m = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            if r == self.nrows:
                break
            p = next((i for i in range(r, self.nrows) if m[i][c]), None)
            if p is None:
                continue
            m[r], m[p] = m[p], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            pivot_row = m[r]
            for i in range(self.nrows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], pivot_row)]
            pivots.append(c)
            r += 1
        return QMatrix(self.nrows, self.ncols, tuple(tuple(row) for row in m)), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> QMatrix:
        """Columns form a basis of ``{x : A x = 0}``."""
        red, pivots = self.rref()
        free = [j for j in range(self.ncols) if j not in pivots]
        cols = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for i, p in enumerate(pivots):
                v[p] = -red.rows[i][f]
            cols.append(v)
        return QMatrix.from_columns(cols, self.ncols)

    def left_nullspace(self) -> QMatrix:
        """Rows form a basis of ``{y : y A = 0}``."""
        return self.T.nullspace().T

    def column_basis(self) -> tuple[QMatrix, QMatrix]:
        """Rank factorisation ``A = C @ R`` with ``C`` the pivot columns of ``A``.

        ``C`` has full column rank, ``R`` is the nonzero part of the RREF and
        has full row rank with an identity at the pivot columns.
        """
        red, pivots = self.rref()
        c = self.select(cols=pivots)
        r = red.select(rows=range(len(pivots)))
        return c, r

    def left_inverse(self) -> QMatrix:
        """``L`` with ``L @ A = I``; requires full column rank."""
        if self.rank() != self.ncols:
            raise ShapeError("left inverse requires full column rank")
        return self.T.right_inverse().T

    def right_inverse(self) -> QMatrix:
        """``R`` with ``A @ R = I``; requires full row rank."""
        # Solve A X = I via the RREF of the augmented matrix [A | I].
        n = self.nrows
        aug = QMatrix(n, self.ncols + n, tuple(r + e for r, e in zip(self.rows, QMatrix.identity(n).rows)))
        red, pivots = aug.rref()
        if len([p for p in pivots if p < self.ncols]) != n:
            raise ShapeError("right inverse requires full row rank")
        x = [[Fraction(0)] * n for _ in range(self.ncols)]
        for i, p in enumerate(pivots):
            x[p] = list(red.rows[i][self.ncols:])
        return QMatrix.from_rows(x, n)

    def inverse(self) -> QMatrix:
        if self.nrows != self.ncols:
            raise ShapeError("inverse of a non-square matrix")
        return self.right_inverse()

    def solve_left(self, b: QMatrix) -> QMatrix:
        """``X`` with ``A @ X = B``; raises ShapeError if no solution exists."""
        aug = QMatrix(self.nrows, self.ncols + b.ncols, tuple(r + s for r, s in zip(self.rows, b.rows)))
        red, pivots = aug.rref()
        if any(p >= self.ncols for p in pivots):
            raise ShapeError("system has no solution")
        x = [[Fraction(0)] * b.ncols for _ in range(self.ncols)]
        for i, p in enumerate(pivots):
            x[p] = list(red.rows[i][self.ncols:])
        return QMatrix.from_rows(x, b.ncols)

    # -- interchange ------------------------------------------------------

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"QMatrix({self.nrows}x{self.ncols}: [{body}])"
