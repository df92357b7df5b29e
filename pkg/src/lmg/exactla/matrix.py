"""Immutable exact rational matrices.

Entries are :class:`fractions.Fraction`; integers are accepted everywhere and
strings of the form ``"p/q"`` are parsed on construction. Vectors are plain
tuples (of ``Fraction`` or ``int``) and are treated as column vectors by
``A @ v``.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

from ..errors import DimensionError, PreconditionError, SingularMatrixError

Number = Union[int, Fraction, str]
Vector = tuple


def to_fraction(x: Number) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact entry")


def as_vector(v: Iterable[Number]) -> tuple[Fraction, ...]:
    return tuple(to_fraction(x) for x in v)


def is_integral(v: Iterable[Fraction | int]) -> bool:
    return all(Fraction(x).denominator == 1 for x in v)


def common_denominator(values: Iterable[Fraction | int]) -> int:
    d = 1
    for x in values:
        d = lcm(d, Fraction(x).denominator)
    return d


def bareiss_det(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


class RatMatrix:
    """An immutable ``nrows x ncols`` matrix over Q."""

    __slots__ = ("_rows", "nrows", "ncols", "_hash")

    def __init__(self, rows: Iterable[Iterable[Number]], ncols: int | None = None):
        data = tuple(as_vector(r) for r in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise DimensionError("ragged matrix rows")
            if ncols is not None and ncols != width:
                raise DimensionError("column count mismatch")
        else:
            width = 0 if ncols is None else ncols
        self._rows = data
        self.nrows = len(data)
        self.ncols = width
        self._hash = None

    # construction -----------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, m: int, k: int) -> "RatMatrix":
        return cls([[0] * k for _ in range(m)], ncols=k)

    @classmethod
    def diag(cls, *entries: Number) -> "RatMatrix":
        n = len(entries)
        return cls(
            [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], ncols=n
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Number]], nrows: int | None = None) -> "RatMatrix":
        if not columns:
            return cls.zeros(nrows or 0, 0)
        return cls(zip(*columns), ncols=len(columns))

    @classmethod
    def block_lower(cls, u: Sequence[Number], C: "RatMatrix") -> "RatMatrix":
        """The matrix ``[[1, 0], [u, C]]`` with ``u`` a column."""
        k = C.nrows
        if len(u) != k or not C.is_square:
            raise DimensionError("block shape mismatch")
        top = [1] + [0] * k
        return cls([top] + [[u[i]] + list(C.row(i)) for i in range(k)], ncols=k + 1)

    # access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.col(j) for j in range(self.ncols)]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def entries(self) -> Iterable[Fraction]:
        for r in self._rows:
            yield from r

    def submatrix(self, rows: range | Sequence[int], cols: range | Sequence[int]) -> "RatMatrix":
        return RatMatrix([[self._rows[i][j] for j in cols] for i in rows], ncols=len(cols))

    # predicates -------------------------------------------------------

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for x in self.entries())

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries())

    def is_identity(self) -> bool:
        return self.is_square and self == RatMatrix.identity(self.nrows)

    def to_ints(self) -> list[list[int]]:
        if not self.is_integer():
            raise PreconditionError("matrix has non-integer entries")
        return [[x.numerator for x in r] for r in self._rows]

    # arithmetic -------------------------------------------------------

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            if self.ncols != other.nrows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            return RatMatrix(
                [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._rows],
                ncols=other.ncols,
            )
        v = tuple(other)
        if len(v) != self.ncols:
            raise DimensionError(f"cannot apply {self.shape} matrix to length-{len(v)} vector")
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self._rows)

    def __mul__(self, c: Number) -> "RatMatrix":
        c = to_fraction(c)
        return RatMatrix([[c * x for x in r] for r in self._rows], ncols=self.ncols)

    __rmul__ = __mul__

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise DimensionError("shape mismatch")
        return RatMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)],
            ncols=self.ncols,
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + (-other)

    def __neg__(self) -> "RatMatrix":
        return RatMatrix([[-x for x in r] for r in self._rows], ncols=self.ncols)

    @property
    def T(self) -> "RatMatrix":
        return RatMatrix(self.columns(), ncols=self.nrows)

    def det(self) -> Fraction:
        if not self.is_square:
            raise DimensionError("determinant of a non-square matrix")
        d = common_denominator(self.entries())
        ints = [[(x * d).numerator for x in r] for r in self._rows]
        return Fraction(bareiss_det(ints), d**self.nrows)

    def is_invertible(self) -> bool:
        return self.is_square and self.det() != 0

    def is_unimodular(self) -> bool:
        return self.is_square and self.is_integer() and abs(self.det()) == 1

    def inverse(self) -> "RatMatrix":
        if not self.is_square:
            raise DimensionError("inverse of a non-square matrix")
        n = self.nrows
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self._rows)]
        for c in range(n):
            p = next((i for i in range(c, n) if aug[i][c] != 0), None)
            if p is None:
                raise SingularMatrixError("matrix is singular")
            aug[c], aug[p] = aug[p], aug[c]
            inv = 1 / aug[c][c]
            aug[c] = [x * inv for x in aug[c]]
            for i in range(n):
                if i != c and aug[i][c] != 0:
                    f = aug[i][c]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
        return RatMatrix([r[n:] for r in aug], ncols=n)

    def __pow__(self, k: int) -> "RatMatrix":
        if not self.is_square:
            raise DimensionError("power of a non-square matrix")
        if k < 0:
            return self.inverse() ** (-k)
        result = RatMatrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    # comparison / display --------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, self._rows))
        return self._hash

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self._rows]

    def __repr__(self) -> str:
        return f"RatMatrix({self.to_strings()!r})"

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(r) + "]" for r in self.to_strings()) + "]"


def nullspace(M: RatMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of ``{x : M x = 0}``.

    Basis vector ``k`` has a 1 in the ``k``-th free coordinate and 0 in every
    other free coordinate, so any solution's coefficients are its free
    coordinates.
    """
    m, n = M.shape
    rows = [list(r) for r in M.rows]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][f]
        basis.append(tuple(v))
    return basis


def rank(M: RatMatrix) -> int:
    return M.ncols - len(nullspace(M))
