"""Conjugacy data for rational matrices.

The rational canonical form is computed from the Smith form of the
characteristic matrix ``xI - A`` over the Euclidean ring Q[x]; its
invariant-factor chain is a complete invariant for conjugacy in GL_n(Q).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from ..errors import DimensionError, SingularMatrixError
from .matrix import RatMatrix, nullspace
from .poly import IntPolynomial, QPoly, cyclotomic, euler_phi


def _char_matrix(A: RatMatrix) -> list[list[QPoly]]:
    n = A.nrows
    return [
        [QPoly((-A[i, j], 1)) if i == j else QPoly((-A[i, j],)) for j in range(n)]
        for i in range(n)
    ]


def _poly_smith_diagonal(M: list[list[QPoly]]) -> list[QPoly]:
    """Monic diagonal of the Smith form of a square matrix over Q[x]."""
    M = [list(r) for r in M]
    n = len(M)
    diag: list[QPoly] = []
    for t in range(n):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if M[i][j] and (best is None or M[i][j].deg < M[best[0]][best[1]].deg):
                        best = (i, j)
            if best is None:
                return diag + [QPoly()] * (n - t)
            bi, bj = best
            M[t], M[bi] = M[bi], M[t]
            for r in M:
                r[t], r[bj] = r[bj], r[t]
            p = M[t][t]
            dirty = False
            for i in range(t + 1, n):
                if M[i][t]:
                    q = M[i][t] // p
                    M[i] = [a - q * b for a, b in zip(M[i], M[t])]
                    dirty = dirty or bool(M[i][t])
            for j in range(t + 1, n):
                if M[t][j]:
                    q = M[t][j] // p
                    for r in M:
                        r[j] = r[j] - q * r[t]
                    dirty = dirty or bool(M[t][j])
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if M[i][j] % p),
                None,
            )
            if bad is not None:
                M[t] = [a + b for a, b in zip(M[t], M[bad])]
                continue
            break
        diag.append(M[t][t].monic())
    return diag


def rational_invariant_factors(A: RatMatrix) -> list[QPoly]:
    """Monic invariant factors of ``A`` of positive degree, ``f1 | f2 | ...``."""
    if not A.is_square:
        raise DimensionError("frobenius_form needs a square matrix")
    return [f for f in _poly_smith_diagonal(_char_matrix(A)) if f.deg >= 1]


def frobenius_form(A: RatMatrix) -> tuple[IntPolynomial, ...]:
    """Invariant-factor chain of the rational canonical form of ``A``.

    Each factor is reported as the primitive integer multiple of the monic
    rational factor, so the chain is canonical: two matrices are conjugate in
    GL_n(Q) exactly when their chains are equal.
    """
    return tuple(IntPolynomial.from_rational(f) for f in rational_invariant_factors(A))


def minimal_polynomial(A: RatMatrix) -> QPoly:
    factors = rational_invariant_factors(A)
    return factors[-1] if factors else QPoly((1,))


def characteristic_polynomial(A: RatMatrix) -> QPoly:
    out = QPoly((1,))
    for f in rational_invariant_factors(A):
        out = out * f
    return out


def companion(poly: IntPolynomial | QPoly) -> RatMatrix:
    """Companion matrix of a monic polynomial (ones on the subdiagonal)."""
    p = poly.to_qpoly() if isinstance(poly, IntPolynomial) else poly
    p = p.monic()
    n = p.deg
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = 1
    for i in range(n):
        rows[i][n - 1] = -p.c[i]
    return RatMatrix(rows, ncols=n)


def matrix_order(A: RatMatrix) -> int | None:
    """Least ``m >= 1`` with ``A^m = I``, or ``None`` if ``A`` has infinite order.

    A has finite order iff its minimal polynomial is a squarefree product of
    cyclotomic polynomials; only the finitely many indices ``d`` with
    ``phi(d) <= n`` can occur.
    """
    if not A.is_square:
        raise DimensionError("matrix_order needs a square matrix")
    if A.det() == 0:
        raise SingularMatrixError("matrix_order needs an invertible matrix")
    n = A.nrows
    if n == 0:
        return 1
    mp = minimal_polynomial(A)
    if any(c.denominator != 1 for c in mp.c):
        return None
    order = 1
    # phi(d) >= sqrt(d / 2), so d <= 2 n^2 covers every candidate
    for d in range(1, 2 * n * n + 3):
        if euler_phi(d) > n or mp.deg == 0:
            continue
        phi_d = cyclotomic(d).to_qpoly()
        q, r = divmod(mp, phi_d)
        if r:
            continue
        if not (q % phi_d):
            return None
        mp = q
        order = lcm(order, d)
    return order if mp.deg == 0 else None


def conjugator_space(A: RatMatrix, A_bar: RatMatrix, epsilon: int = 1) -> list[RatMatrix]:
    """Q-basis of ``{X : X A^epsilon = A_bar X}``.

    The coefficients of a solution with respect to this basis are its entries
    at the free positions (row-major), so integer solutions have integer
    coefficients.
    """
    if not (A.is_square and A_bar.is_square) or A.nrows != A_bar.nrows:
        raise DimensionError("conjugator_space needs square matrices of equal size")
    if epsilon not in (1, -1):
        raise ValueError("epsilon must be +1 or -1")
    n = A.nrows
    M = A if epsilon == 1 else A.inverse()
    coeffs = [[Fraction(0)] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            eq = coeffs[i * n + j]
            for k in range(n):
                eq[i * n + k] += M[k, j]
                eq[k * n + j] -= A_bar[i, k]
    basis = nullspace(RatMatrix(coeffs, ncols=n * n))
    return [RatMatrix([v[i * n:(i + 1) * n] for i in range(n)], ncols=n) for v in basis]
