"""Full-rank subgroups of Q^n in canonical form, and the union modules
``M(A) = union over j of A^j(Z^n)`` for integer ``A``.

A :class:`Lattice` is stored as ``(1/den) * rowspan_Z(H)`` where ``H`` is an
integer ``n x n`` matrix in row Hermite normal form and ``den`` is minimal.
Because the representation is canonical, lattice equality is plain
dataclass equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from math import gcd, prod
from typing import Iterable, NamedTuple, Sequence

from .errors import DimensionError, NotConjugatorError, NotFullRankError, PreconditionError, SingularMatrixError
from .exactla import RatMatrix, as_vector, common_denominator
from .exactla.normal_forms import hnf_rows


@dataclass(frozen=True)
class Lattice:
    n: int
    den: int
    H: tuple[tuple[int, ...], ...]

    @classmethod
    def standard(cls, n: int) -> "Lattice":
        return cls(n, 1, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @cached_property
    def basis(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(Fraction(x, self.den) for x in row) for row in self.H)

    @cached_property
    def covolume(self) -> Fraction:
        """``|det|`` of a basis; equals ``[Z^n : self]`` for integer lattices."""
        return Fraction(prod(self.H[i][i] for i in range(self.n)), self.den**self.n)

    def is_integral(self) -> bool:
        return self.den == 1

    def is_standard(self) -> bool:
        return self == Lattice.standard(self.n)

    def residue(self, u: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Split an integer vector as ``u = r + w`` with ``w`` in the lattice.

        ``r`` is the canonical coset representative (coordinate ``i`` reduced
        into ``[0, H_ii)``, top-down); requires an integral lattice.
        """
        if self.den != 1:
            raise PreconditionError("residues need an integral lattice")
        r = list(u)
        for i, row in enumerate(self.H):
            q = r[i] // row[i]
            if q:
                r = [a - q * b for a, b in zip(r, row)]
        return tuple(r), tuple(a - b for a, b in zip(u, r))

    def transversal(self) -> list[tuple[int, ...]]:
        """Canonical residues of ``Z^n / self`` in lexicographic order."""
        if self.den != 1:
            raise PreconditionError("transversals need an integral lattice")
        out: list[tuple[int, ...]] = [()]
        for i in range(self.n):
            out = [t + (k,) for t in out for k in range(self.H[i][i])]
        return out

    def __repr__(self) -> str:
        rows = ", ".join("(" + ", ".join(str(x) for x in r) + ")" for r in self.basis)
        return f"Lattice<{rows}>"


class Relation(Enum):
    EQUAL = "equal"
    SUB = "sub"
    SUP = "sup"
    INCOMPARABLE = "incomparable"


class Comparison(NamedTuple):
    relation: Relation
    index: int | None = None


def lattice_canonical(vectors: Iterable[Sequence], n: int) -> Lattice:
    vecs = [as_vector(v) for v in vectors]
    if any(len(v) != n for v in vecs):
        raise DimensionError(f"generators must have length {n}")
    d = common_denominator(x for v in vecs for x in v)
    rows = [[(x * d).numerator for x in v] for v in vecs]
    if not rows:
        if n == 0:
            return Lattice.standard(0)
        raise NotFullRankError()
    H, _ = hnf_rows(rows, n)
    H = [r for r in H if any(r)]
    if len(H) != n:
        raise NotFullRankError()
    g = d
    for r in H:
        for x in r:
            g = gcd(g, x)
    return Lattice(n, d // g, tuple(tuple(x // g for x in r) for r in H))


def lattice_from_matrix(M: RatMatrix) -> Lattice:
    """Lattice generated by the rows of ``M``."""
    return lattice_canonical(M.rows, M.ncols)


def lattice_member(lat: Lattice, v: Sequence) -> bool:
    v = as_vector(v)
    if len(v) != lat.n:
        raise DimensionError("dimension mismatch")
    w = [x * lat.den for x in v]
    if any(x.denominator != 1 for x in w):
        return False
    w = [x.numerator for x in w]
    for i, row in enumerate(lat.H):
        q, r = divmod(w[i], row[i])
        if r:
            return False
        if q:
            w = [a - q * b for a, b in zip(w, row)]
    return not any(w)


def is_sublattice(a: Lattice, b: Lattice) -> bool:
    """``a <= b``."""
    if a.n != b.n:
        raise DimensionError("dimension mismatch")
    return all(lattice_member(b, v) for v in a.basis)


def lattice_compare(a: Lattice, b: Lattice) -> Comparison:
    if a.n != b.n:
        raise DimensionError("dimension mismatch")
    if a == b:
        return Comparison(Relation.EQUAL, 1)
    if is_sublattice(a, b):
        return Comparison(Relation.SUB, int(a.covolume / b.covolume))
    if is_sublattice(b, a):
        return Comparison(Relation.SUP, int(b.covolume / a.covolume))
    return Comparison(Relation.INCOMPARABLE, None)


def index_in_standard(lat: Lattice) -> int:
    """``[Z^n : lat]`` for an integral lattice."""
    if not lat.is_integral():
        raise PreconditionError("lattice is not contained in Z^n")
    return int(lat.covolume)


def apply_matrix(A: RatMatrix, lat: Lattice) -> Lattice:
    if A.shape != (lat.n, lat.n):
        raise DimensionError("dimension mismatch")
    if A.det() == 0:
        raise SingularMatrixError("cannot apply a singular matrix to a lattice")
    return lattice_canonical([A @ b for b in lat.basis], lat.n)


def lattice_sum(a: Lattice, b: Lattice) -> Lattice:
    if a.n != b.n:
        raise DimensionError("dimension mismatch")
    return lattice_canonical(a.basis + b.basis, a.n)


def dual(lat: Lattice) -> Lattice:
    """``{y : <y, x> in Z for all x in lat}``."""
    B = RatMatrix(lat.basis, ncols=lat.n)
    return lattice_from_matrix(B.inverse().T)


def intersect(a: Lattice, b: Lattice) -> Lattice:
    # (a ∩ b)^* = a^* + b^* for full-rank lattices
    if a.n != b.n:
        raise DimensionError("dimension mismatch")
    return dual(lattice_sum(dual(a), dual(b)))


def _prime_factors(m: int) -> set[int]:
    m = abs(m)
    out, p = set(), 2
    while p * p <= m:
        while m % p == 0:
            out.add(p)
            m //= p
        p += 1
    if m > 1:
        out.add(m)
    return out


def union_member(A: RatMatrix, v: Sequence) -> bool:
    """Whether ``v`` lies in ``M(A)``, i.e. ``A^j v`` is integral for some ``j >= 0``.

    Iterates ``c -> A c mod d`` on ``(Z/dZ)^n`` where ``d`` is the common
    denominator of ``v``; the orbit is finite so this always terminates.
    """
    if not A.is_square or not A.is_integer():
        raise PreconditionError("union_member needs a square integer matrix")
    v = as_vector(v)
    if len(v) != A.nrows:
        raise DimensionError("dimension mismatch")
    det = A.det()
    if det == 0:
        raise SingularMatrixError("union_member needs an invertible matrix")
    d = common_denominator(v)
    if d == 1:
        return True
    if any(det.numerator % p for p in _prime_factors(d)):
        return False
    rows = A.to_ints()
    c = tuple((x * d).numerator % d for x in v)
    seen = {c}
    while any(c):
        c = tuple(sum(a * b for a, b in zip(r, c)) % d for r in rows)
        if c in seen:
            return False
        seen.add(c)
    return True


def union_condition(A: RatMatrix, A_bar: RatMatrix, B: RatMatrix) -> bool:
    """Whether ``M(A) = union over j of A^j B^{-1}(Z^n)`` given ``A_bar B = B A``.

    The right side equals ``B^{-1} M(A_bar)``, so the equality holds iff the
    columns of ``B`` lie in ``M(A_bar)`` and those of ``B^{-1}`` lie in ``M(A)``.
    """
    for M in (A, A_bar):
        if not M.is_square or not M.is_integer():
            raise PreconditionError("union_condition needs integer matrices")
    if A_bar @ B != B @ A:
        raise NotConjugatorError()
    if B.det() == 0:
        raise SingularMatrixError("B must be invertible")
    B_inv = B.inverse()
    return all(union_member(A_bar, c) for c in B.columns()) and all(
        union_member(A, c) for c in B_inv.columns()
    )
