"""Dense matrices over the polynomial ring.

``PolyMatrix`` is immutable; products, Kronecker products and block
assembly return new matrices.  Determinants use fraction-free Bareiss
elimination, so every intermediate division is an exact polynomial
division.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

from .errors import NotSquare, ShapeMismatch
from .ring import Polynomial, as_polynomial, exact_divide

_ZERO = Polynomial.zero()
_ONE = Polynomial.one()


class PolyMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(as_polynomial(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ShapeMismatch(f"{len(entries)} entries do not fill a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.entries: Tuple[Polynomial, ...] = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "PolyMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "PolyMatrix":
        return cls(rows, cols, [_ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls.scalar(n, _ONE)

    @classmethod
    def scalar(cls, n: int, value) -> "PolyMatrix":
        value = as_polynomial(value)
        return cls(n, n, [value if i == j else _ZERO for i in range(n) for j in range(n)])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij) -> Polynomial:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry {ij} outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Polynomial, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, [fn(e) for e in self.entries])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(len(rows), len(cols), [self[i, j] for i in rows for j in cols])

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")
        return PolyMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot subtract {other.shape} from {self.shape}")
        return PolyMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> "PolyMatrix":
        c = as_polynomial(c)
        return PolyMatrix(self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        return matmul(self, other)

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"PolyMatrix({self.rows}x{self.cols}: [{body}])"


def matmul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    if a.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
    n, k, m = a.rows, a.cols, b.cols
    out = []
    for i in range(n):
        arow = a.entries[i * k:(i + 1) * k]
        for j in range(m):
            acc = _ZERO
            for t in range(k):
                x = arow[t]
                if x:
                    y = b.entries[t * m + j]
                    if y:
                        acc = acc + x * y
            out.append(acc)
    return PolyMatrix(n, m, out)


def transpose(a: PolyMatrix) -> PolyMatrix:
    return PolyMatrix(a.cols, a.rows, [a[i, j] for j in range(a.cols) for i in range(a.rows)])


def kron(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """Kronecker product: block ``(i, j)`` is ``a[i, j] * b``."""
    rows, cols = a.rows * b.rows, a.cols * b.cols
    out = []
    for i in range(a.rows):
        for k in range(b.rows):
            for j in range(a.cols):
                x = a[i, j]
                for l in range(b.cols):
                    out.append(x * b[k, l] if x else _ZERO)
    return PolyMatrix(rows, cols, out)


def block2x2(a: PolyMatrix, b: PolyMatrix, c: PolyMatrix, d: PolyMatrix) -> PolyMatrix:
    """Assemble ``[[a, b], [c, d]]``."""
    if a.rows != b.rows or c.rows != d.rows or a.cols != c.cols or b.cols != d.cols:
        raise ShapeMismatch(f"incompatible blocks {a.shape} {b.shape} {c.shape} {d.shape}")
    rows = []
    for top, bottom in ((a, b), (c, d)):
        for i in range(top.rows):
            rows.append(list(top.row(i)) + list(bottom.row(i)))
    return PolyMatrix(a.rows + c.rows, a.cols + b.cols, [e for r in rows for e in r])


def det(a: PolyMatrix) -> Polynomial:
    """Exact determinant by Bareiss fraction-free elimination.

    The pivot is the first nonzero entry at or below the diagonal in the
    current column; an all-zero column means the determinant is zero.
    """
    if not a.is_square():
        raise NotSquare(f"determinant of a {a.rows}x{a.cols} matrix")
    n = a.rows
    if n == 0:
        return _ONE
    m = [list(a.row(i)) for i in range(n)]
    sign = 1
    prev = _ONE
    for k in range(n - 1):
        pivot_row = next((i for i in range(k, n) if m[i][k]), None)
        if pivot_row is None:
            return _ZERO
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                num = pkk * row_i[j] - mik * row_k[j]
                row_i[j] = exact_divide(num, prev) if (num and prev != _ONE) else num
            row_i[k] = _ZERO
        prev = pkk
    result = m[n - 1][n - 1]
    return -result if sign < 0 else result


def is_invertible_over_fraction_field(a: PolyMatrix) -> bool:
    return not det(a).is_zero()
