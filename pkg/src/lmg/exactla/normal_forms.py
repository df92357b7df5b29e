"""Hermite and Smith normal forms of integer matrices.

Both routines work on lists of Python ints internally and wrap the results
as :class:`RatMatrix` with integer entries. Conventions:

* HNF is row-style: ``H = U M`` is in row echelon form, each pivot is
  positive, and the entries above a pivot lie in ``[0, pivot)``.
* SNF returns ``S = U M V`` diagonal with non-negative invariant factors
  ``d1 | d2 | ...`` (zeros last).
"""

from __future__ import annotations

from ..errors import PreconditionError
from .matrix import RatMatrix


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and ``a x + b y = g``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def hnf_rows(rows: list[list[int]], ncols: int | None = None) -> tuple[list[list[int]], list[list[int]]]:
    """Row HNF on plain integer lists; returns ``(H, U)`` with ``H = U M``."""
    H = [list(r) for r in rows]
    m = len(H)
    k = len(H[0]) if H else (ncols or 0)
    U = _identity(m)
    r = 0
    for c in range(k):
        if r == m:
            break
        for i in range(r + 1, m):
            b = H[i][c]
            if b == 0:
                continue
            a = H[r][c]
            g, x, y = xgcd(a, b)
            a, b = a // g, b // g
            for M in (H, U):
                ra, rb = M[r], M[i]
                M[r] = [x * p + y * q for p, q in zip(ra, rb)]
                M[i] = [-b * p + a * q for p, q in zip(ra, rb)]
        piv = H[r][c]
        if piv == 0:
            continue
        if piv < 0:
            H[r] = [-v for v in H[r]]
            U[r] = [-v for v in U[r]]
            piv = -piv
        for i in range(r):
            q = H[i][c] // piv
            if q:
                H[i] = [p - q * s for p, s in zip(H[i], H[r])]
                U[i] = [p - q * s for p, s in zip(U[i], U[r])]
        r += 1
    return H, U


def hnf(M: RatMatrix) -> tuple[RatMatrix, RatMatrix]:
    """Row Hermite normal form ``(H, U)`` of an integer matrix with ``H = U M``."""
    if not M.is_integer():
        raise PreconditionError("hnf requires an integer matrix")
    H, U = hnf_rows(M.to_ints(), M.ncols)
    return RatMatrix(H, ncols=M.ncols), RatMatrix(U, ncols=M.nrows)


def snf_rows(rows: list[list[int]], ncols: int | None = None):
    S = [list(r) for r in rows]
    m = len(S)
    k = len(S[0]) if S else (ncols or 0)
    U = _identity(m)
    V = _identity(k)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (S, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, f):  # row_dst += f * row_src
        S[dst] = [a + f * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a + f * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, f):
        for M in (S, V):
            for r in M:
                r[dst] += f * r[src]

    for t in range(min(m, k)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, k):
                    if S[i][j] and (best is None or abs(S[i][j]) < abs(S[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return S, U, V
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = S[t][t]
            dirty = False
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(i, t, -(S[i][t] // p))
                    dirty = dirty or S[i][t] != 0
            for j in range(t + 1, k):
                if S[t][j]:
                    add_col(j, t, -(S[t][j] // p))
                    dirty = dirty or S[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, k) if S[i][j] % p),
                None,
            )
            if bad is not None:
                add_row(t, bad, 1)
                continue
            break
        if S[t][t] < 0:
            S[t] = [-v for v in S[t]]
            U[t] = [-v for v in U[t]]
    return S, U, V


def snf(M: RatMatrix) -> tuple[RatMatrix, RatMatrix, RatMatrix]:
    """Smith normal form ``(S, U, V)`` of an integer matrix, ``S = U M V``."""
    if not M.is_integer():
        raise PreconditionError("snf requires an integer matrix")
    S, U, V = snf_rows(M.to_ints(), M.ncols)
    return RatMatrix(S, ncols=M.ncols), RatMatrix(U, ncols=M.nrows), RatMatrix(V, ncols=M.ncols)


def invariant_factors(M: RatMatrix) -> list[int]:
    """Diagonal of the Smith form, including unit factors and trailing zeros."""
    S, _, _ = snf(M)
    return [S[i, i].numerator for i in range(min(S.shape))]
