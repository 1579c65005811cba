"""Exact integer and rational matrices.

Everything here is float-free except where explicitly noted (the advisory
spectral norm in :mod:`dilationk.stability`).
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence


class SingularMatrixError(ValueError):
    """Raised when an operation needs an invertible matrix."""


class Matrix:
    """Immutable dense matrix with exact (int or Fraction) entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, data: Iterable[Sequence], cols: int | None = None):
        data = [tuple(self._coerce(x) for x in row) for row in data]
        if data:
            widths = {len(r) for r in data}
            if len(widths) != 1:
                raise ValueError("ragged matrix rows")
            width = widths.pop()
        else:
            width = cols or 0
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", tuple(x for row in data for x in row))

    def __setattr__(self, name, value):
        raise AttributeError("matrices are immutable")

    @staticmethod
    def _coerce(x):
        if isinstance(x, bool):
            raise TypeError("boolean matrix entry")
        if isinstance(x, int):
            return x
        if isinstance(x, Rational):
            f = Fraction(x)
            return f.numerator if f.denominator == 1 else f
        raise TypeError(f"non-exact matrix entry {x!r}")

    @classmethod
    def _wrap(cls, m: "Matrix"):
        out = object.__new__(cls)
        for k in Matrix.__slots__:
            object.__setattr__(out, k, getattr(m, k))
        return out

    # -- construction -------------------------------------------------
    @staticmethod
    def identity(n: int):
        return Matrix._make([[int(i == j) for j in range(n)] for i in range(n)], n)

    @staticmethod
    def zeros(rows: int, cols: int):
        return Matrix._make([[0] * cols for _ in range(rows)], cols)

    @staticmethod
    def scalar(c, n: int):
        return Matrix._make([[c if i == j else 0 for j in range(n)] for i in range(n)], n)

    # -- access -------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def tolist(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_integral(self) -> bool:
        return all(isinstance(x, int) for x in self.entries)

    def to_integer(self) -> "IntegerMatrix":
        if not self.is_integral:
            raise ValueError("matrix has non-integer entries")
        return IntegerMatrix._wrap(self)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]):
        return type(self)._make([[self[i, j] for j in cols] for i in rows], len(cols))

    # -- arithmetic ---------------------------------------------------
    @staticmethod
    def _make(data, cols=None):
        m = Matrix(data, cols)
        return IntegerMatrix._wrap(m) if m.is_integral else RationalMatrix._wrap(m)

    def transpose(self):
        return self._make([list(self.col(j)) for j in range(self.cols)], self.rows)

    @property
    def T(self):
        return self.transpose()

    def __add__(self, other):
        self._check_same_shape(other)
        return self._make([[a + b for a, b in zip(self.row(i), other.row(i))]
                           for i in range(self.rows)], self.cols)

    def __sub__(self, other):
        self._check_same_shape(other)
        return self._make([[a - b for a, b in zip(self.row(i), other.row(i))]
                           for i in range(self.rows)], self.cols)

    def __neg__(self):
        return self._make([[-a for a in self.row(i)] for i in range(self.rows)], self.cols)

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return NotImplemented
        c = self._coerce(c)
        return self._make([[c * a for a in self.row(i)] for i in range(self.rows)], self.cols)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [other.col(j) for j in range(other.cols)]
        return self._make([[sum(a * b for a, b in zip(self.row(i), c)) for c in cols]
                           for i in range(self.rows)], other.cols)

    def __pow__(self, n: int):
        if not self.is_square:
            raise ValueError("power of non-square matrix")
        if n < 0:
            return rational_inverse(self) ** (-n)
        result, base = Matrix.identity(self.rows), self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def apply(self, v: Sequence):
        """Matrix-vector product as a tuple."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(self.row(i), v)) for i in range(self.rows))

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    # -- comparison / display ----------------------------------------
    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self.shape == other.shape and self.entries == other.entries
        if isinstance(other, (list, tuple)):
            try:
                return self == Matrix(other)
            except (TypeError, ValueError):
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"{type(self).__name__}({self.tolist()!r})"

    def __str__(self):
        cells = [[str(x) for x in self.row(i)] for i in range(self.rows)]
        w = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)


class IntegerMatrix(Matrix):
    """Matrix of arbitrary-precision integers."""

    __slots__ = ()

    def __init__(self, data, cols=None):
        super().__init__(data, cols)
        if not self.is_integral:
            raise TypeError("IntegerMatrix entries must be integers")


class RationalMatrix(Matrix):
    """Matrix of exact rationals; Fraction keeps entries in lowest terms."""

    __slots__ = ()


def as_matrix(m) -> Matrix:
    if isinstance(m, Matrix):
        return m
    return Matrix._make(m)


def as_integer_matrix(m) -> IntegerMatrix:
    if isinstance(m, IntegerMatrix):
        return m
    m = as_matrix(m)
    if not m.is_integral:
        raise TypeError("expected an integer matrix")
    return IntegerMatrix._wrap(m)


def _require_square(m: Matrix, what: str):
    if not m.is_square:
        raise ValueError(f"{what} needs a square matrix, got {m.rows}x{m.cols}")


def determinant(m) -> int:
    """Fraction-free (Bareiss) determinant of an integer matrix."""
    m = as_integer_matrix(m)
    _require_square(m, "determinant")
    n = m.rows
    if n == 0:
        return 1
    a = m.tolist()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is the Bareiss invariant
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def characteristic_polynomial(m) -> list[int]:
    """Coefficients of det(xI - m), highest degree first (monic).

    Faddeev-LeVerrier; every division is exact over the integers.
    """
    m = as_integer_matrix(m)
    _require_square(m, "characteristic_polynomial")
    n = m.rows
    coeffs = [1]
    aux = IntegerMatrix.zeros(n, n)
    ident = IntegerMatrix.identity(n)
    c = 1
    for k in range(1, n + 1):
        aux = m @ aux + ident * c
        am = m @ aux
        trace = sum(am[i, i] for i in range(n))
        q, r = divmod(-trace, k)
        assert r == 0
        c = q
        coeffs.append(c)
    return coeffs


def rational_inverse(m) -> RationalMatrix:
    """Exact inverse by Gauss-Jordan over the rationals."""
    m = as_matrix(m)
    _require_square(m, "rational_inverse")
    n = m.rows
    a = [[Fraction(x) for x in m.row(i)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        a[k], a[piv] = a[piv], a[k]
        p = a[k][k]
        a[k] = [x / p for x in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return RationalMatrix._wrap(Matrix([row[n:] for row in a], n))


def solve_rational(m, b: Sequence) -> tuple:
    """Solve m x = b exactly over Q for invertible m."""
    return rational_inverse(m).apply(b)


def block_transpose_permutation(r: int, n_blocks: int) -> IntegerMatrix:
    """Permutation U with U[p, q] = 1 iff p = t*N + k and q = k*r + t.

    Conjugating by U regroups an r x r matrix of N x N blocks into an
    N x N matrix of r x r blocks.
    """
    if r < 1 or n_blocks < 2:
        raise ValueError("need r >= 1 and n_blocks >= 2")
    size = r * n_blocks
    u = [[0] * size for _ in range(size)]
    for k in range(n_blocks):
        for t in range(r):
            u[t * n_blocks + k][k * r + t] = 1
    return IntegerMatrix(u)
