"""Slow, independent reference implementations used to cross-check lmg.

Nothing here imports lmg's algorithms; only the plain data types.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

import sympy


def det_ints(rows):
    return int(sympy.Matrix(rows).det()) if rows else 1


def determinantal_divisors(rows):
    """d_k = gcd of all k x k minors, k = 1..min(shape)."""
    m, k = len(rows), len(rows[0])
    out = []
    for size in range(1, min(m, k) + 1):
        g = 0
        for ri in itertools.combinations(range(m), size):
            for ci in itertools.combinations(range(k), size):
                g = gcd(g, det_ints([[rows[i][j] for j in ci] for i in ri]))
        out.append(g)
    return out


def snf_diagonal(rows):
    """Invariant factors from determinantal divisors."""
    d = determinantal_divisors(rows)
    out, prev = [], 1
    for x in d:
        if x == 0:
            out.append(0)
        else:
            out.append(x // prev)
            prev = x
    return out


def in_row_lattice(basis_rows, v):
    """Whether v is an integer combination of the (rational, independent) rows."""
    M = sympy.Matrix(basis_rows).T
    sol = M.solve(sympy.Matrix(v)) if M.shape[0] == M.shape[1] else None
    if sol is None:
        sol, params = M.gauss_jordan_solve(sympy.Matrix(v))
    return all(x.is_integer for x in sol)


def matrix_order_by_powers(rows, limit=64):
    M = sympy.Matrix(rows)
    P = sympy.eye(M.shape[0])
    for k in range(1, limit + 1):
        P = P * M
        if P == sympy.eye(M.shape[0]):
            return k
    return None


def union_member_by_powers(A_rows, v, limit=64):
    A = sympy.Matrix(A_rows)
    w = sympy.Matrix([sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x for x in v])
    for _ in range(limit + 1):
        if all(x.is_integer for x in w):
            return True
        w = A * w
    return False


def charpoly_coeffs(rows):
    """Monic characteristic polynomial, coefficients lowest degree first."""
    x = sympy.Symbol("x")
    M = sympy.Matrix([[sympy.Rational(str(e)) for e in r] for r in rows])
    p = sympy.Poly(M.charpoly(x).as_expr(), x)
    return [Fraction(str(c)) for c in reversed(p.all_coeffs())]


def lattice_index_by_box(gen_rows, n, box):
    """Count points of Z^n/L inside [0, box)^n when box*Z^n <= L, i.e. [Z^n : L]."""
    count = 0
    for pt in itertools.product(range(box), repeat=n):
        if in_row_lattice(gen_rows, pt):
            count += 1
    return box**n // count


# word problem ------------------------------------------------------------


def rewrite_identity(letters, in_L, in_AL, apply_A, apply_Ainv, n):
    """Exhaustive pinch rewriting on a list of ('x', v) / ('t', e) letters.

    Repeatedly merges adjacent x letters and replaces the rightmost pinch;
    returns the final letter list. A separate implementation (rightmost
    instead of leftmost, list re-scans instead of a stack).
    """
    w = list(letters)
    changed = True
    while changed:
        changed = False
        merged = []
        for let in w:
            if let[0] == "x" and merged and merged[-1][0] == "x":
                v = tuple(a + b for a, b in zip(merged[-1][1], let[1]))
                merged[-1] = ("x", v)
            else:
                merged.append(let)
        w = [let for let in merged if not (let[0] == "x" and not any(let[1]))]
        for i in range(len(w) - 1, -1, -1):
            if w[i][0] != "t":
                continue
            # pinch t^e [x^v] t^-e ending at i
            if i >= 1 and w[i - 1][0] == "t":
                j, v = i - 1, (0,) * n
            elif i >= 2 and w[i - 1][0] == "x" and w[i - 2][0] == "t":
                j, v = i - 2, w[i - 1][1]
            else:
                continue
            e_open, e_close = w[j][1], w[i][1]
            if e_open != -e_close:
                continue
            if e_open == 1 and in_L(v):
                image = apply_A(v)
            elif e_open == -1 and in_AL(v):
                image = apply_Ainv(v)
            else:
                continue
            w[j : i + 1] = [("x", image)]
            changed = True
            break
    return w


def affine_image(letters, A_rows, n):
    """Image in Aff(Q^n) under x^v -> (translate v), t -> A; returns (M, b)."""
    A = sympy.Matrix(A_rows)
    Ainv = A.inv()
    M = sympy.eye(n)
    b = sympy.zeros(n, 1)
    for kind, val in letters:
        if kind == "x":
            b = b + M * sympy.Matrix(val)
        else:
            M = M * (A if val == 1 else Ainv)
    return M, b
