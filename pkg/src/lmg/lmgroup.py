"""The groups G(A, L) = <x_1..x_n, t | [x_i, x_j] = 1, t x^v t^-1 = x^(Av) for v in L>.

G(A, L) is an HNN extension of H = Z^n with associated subgroups L and AL.
Elements are :class:`~lmg.words.Word` objects; equality is decided by
Britton reduction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Sequence, Union

from .errors import DatumError, DimensionError, PreconditionError
from .exactla import RatMatrix, is_integral, snf
from .lattice import (
    Lattice,
    apply_matrix,
    intersect,
    is_sublattice,
    lattice_canonical,
    lattice_member,
)
from .words import Gen, Letter, Stable, Word
from .words import parse_word as _parse_word

__all__ = [
    "AbelianInvariants",
    "Coarse",
    "GroupClass",
    "GroupDatum",
    "SemiReducedForm",
    "abelianization",
    "britton_reduce",
    "coarse_class",
    "commutes_formula",
    "cyclic_reduce",
    "element_equal",
    "h1_member",
    "k_embed",
    "parse_word",
    "psi",
    "semi_reduced_decomposition",
    "validate_datum",
]


@dataclass(frozen=True)
class GroupDatum:
    n: int
    A: RatMatrix
    L: Lattice

    @cached_property
    def AL(self) -> Lattice:
        return apply_matrix(self.A, self.L)

    @cached_property
    def A_inv(self) -> RatMatrix:
        return self.A.inverse()

    @classmethod
    def bs(cls, p: int, q: int) -> "GroupDatum":
        """BS(p, q) = <x, t | t x^p t^-1 = x^q> as G((q/p), pZ)."""
        if p == 0 or q == 0:
            raise DatumError("Baumslag-Solitar parameters must be nonzero")
        return validate_datum(1, [[Fraction(q, p)]], [[p]])

    def __str__(self) -> str:
        return f"G(A={self.A}, L={self.L!r})"


def validate_datum(n: int, A, L_gens: Sequence[Sequence]) -> GroupDatum:
    """Check that ``(n, A, L)`` defines a group and return the datum.

    ``A`` is a :class:`RatMatrix` or a nested sequence of rationals; ``L_gens``
    is any generating set of the lattice L.
    """
    try:
        A = A if isinstance(A, RatMatrix) else RatMatrix(A, ncols=n)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise DatumError(f"bad matrix entries: {exc}") from exc
    if A.shape != (n, n):
        raise DatumError(f"A must be {n}x{n}, got {A.nrows}x{A.ncols}")
    if A.det() == 0:
        raise DatumError("A is singular")
    try:
        L = lattice_canonical(L_gens, n)
    except DimensionError as exc:
        raise DatumError(str(exc)) from exc
    except PreconditionError as exc:
        raise DatumError("L is rank deficient") from exc
    if not L.is_integral():
        raise DatumError("L is not contained in Z^n")
    G = GroupDatum(n, A, L)
    if not G.AL.is_integral():
        raise DatumError("AL is not contained in Z^n")
    return G


def parse_word(text: str, G: Union[GroupDatum, int]) -> Word:
    return _parse_word(text, G.n if isinstance(G, GroupDatum) else G)


def _int_vec(v) -> tuple[int, ...]:
    return tuple(int(x) for x in v)


def _check_word(G: GroupDatum, w: Word) -> None:
    for let in w:
        if isinstance(let, Gen) and len(let.v) != G.n:
            raise DimensionError(f"generator {let} has arity {len(let.v)}, expected {G.n}")


def _push_gen(stack: list[Letter], v: tuple[int, ...]) -> None:
    if stack and isinstance(stack[-1], Gen):
        v = tuple(a + b for a, b in zip(stack.pop().v, v))
    if any(v):
        stack.append(Gen(v))


def britton_reduce(G: GroupDatum, w: Word) -> Word:
    """Remove every pinch ``t x^(v in L) t^-1`` and ``t^-1 x^(v in AL) t``.

    Single left-to-right pass with a stack: a pinch can only end at the
    stable letter being pushed, since everything below it is already reduced.
    """
    _check_word(G, w)
    zero = (0,) * G.n
    stack: list[Letter] = []
    for let in w:
        if isinstance(let, Gen):
            _push_gen(stack, let.v)
            continue
        e = let.e
        if stack and isinstance(stack[-1], Gen):
            v, opener = stack[-1].v, len(stack) - 2
        else:
            v, opener = zero, len(stack) - 1
        if opener >= 0 and stack[opener] == Stable(-e):
            if e == -1 and lattice_member(G.L, v):
                image = G.A @ v
            elif e == 1 and lattice_member(G.AL, v):
                image = G.A_inv @ v
            else:
                stack.append(let)
                continue
            del stack[opener:]
            _push_gen(stack, _int_vec(image))
            continue
        stack.append(let)
    return Word(stack)


def element_equal(G: GroupDatum, w1: Word, w2: Word) -> bool:
    return not britton_reduce(G, w1 * w2.inverse())


def is_identity(G: GroupDatum, w: Word) -> bool:
    return not britton_reduce(G, w)


def psi(w: Word) -> int:
    """The homomorphism G -> Z sending t to 1 and every x^v to 0."""
    return w.psi


def cyclic_reduce(G: GroupDatum, w: Word) -> tuple[Word, Word, int]:
    """Return ``(core, conjugator, tau)`` with ``w = conjugator core conjugator^-1``.

    ``tau`` is the number of stable letters of the cyclically reduced core,
    i.e. the translation length of ``w`` on the Bass-Serre tree.
    """
    core = britton_reduce(G, w)
    conj = Word()
    while True:
        letters = core.letters
        if not any(isinstance(x, Stable) for x in letters):
            return core, conj, 0
        if isinstance(letters[0], Gen):
            c = Word(letters[:1])
        else:
            first = letters[0]
            last_stable = letters[-1] if isinstance(letters[-1], Stable) else letters[-2]
            tail = letters[-1].v if isinstance(letters[-1], Gen) else (0,) * G.n
            pinch = last_stable.e == -first.e and (
                lattice_member(G.L, tail) if last_stable.e == 1 else lattice_member(G.AL, tail)
            )
            if not pinch:
                return core, conj, core.stable_count
            c = Word(letters[:1])
        core = britton_reduce(G, c.inverse() * core * c)
        conj = conj * c


@dataclass(frozen=True)
class SemiReducedForm:
    """The product of ``t^alpha x^v t^-alpha`` over ``factors``."""

    factors: tuple[tuple[int, tuple[int, ...]], ...] = field(default=())

    def to_word(self) -> Word:
        letters: list[Letter] = []
        level = 0
        for alpha, v in self.factors:
            step = alpha - level
            letters.extend([Stable(1 if step > 0 else -1)] * abs(step))
            letters.append(Gen(tuple(v)))
            level = alpha
        letters.extend([Stable(1 if level < 0 else -1)] * abs(level))
        return Word(letters)

    @property
    def levels(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.factors)

    def __len__(self) -> int:
        return len(self.factors)


def _level_scan(w: Word) -> list[tuple[int, tuple[int, ...]]]:
    out = []
    level = 0
    for let in w:
        if isinstance(let, Stable):
            level += let.e
        else:
            out.append((level, let.v))
    return out


def _require_psi_zero(w: Word) -> None:
    if w.psi != 0:
        raise PreconditionError(f"word has psi = {w.psi}, expected 0")


def semi_reduced_decomposition(G: GroupDatum, w: Word) -> SemiReducedForm:
    """Level-scan of the Britton-reduced form of a word with ``psi = 0``."""
    _require_psi_zero(w)
    return SemiReducedForm(tuple(_level_scan(britton_reduce(G, w))))


def _power_lattice(G: GroupDatum, j: int) -> Lattice:
    """``A^j L`` for any integer ``j``."""
    return apply_matrix(G.A**j, G.L)


def commutes_formula(G: GroupDatum, w: Word, v: Sequence[int]) -> bool:
    """Whether ``w`` (with psi 0) commutes with ``x^v``.

    Tests ``v`` against the intersection of ``A^j L`` for
    ``gamma_- < j <= gamma_+``, where ``gamma_-``/``gamma_+`` are the extreme
    levels (clamped at 0) of the semi-reduced decomposition.
    """
    if len(v) != G.n:
        raise DimensionError(f"vector must have length {G.n}")
    levels = semi_reduced_decomposition(G, w).levels
    lo = min((0,) + levels)
    hi = max((0,) + levels)
    return all(lattice_member(_power_lattice(G, j), v) for j in range(lo + 1, hi + 1))


def centralizer_lattice(G: GroupDatum, w: Word) -> Lattice:
    """``{v : [w, x^v] = 1}`` for ``w`` with psi 0."""
    levels = semi_reduced_decomposition(G, w).levels
    lo = min((0,) + levels)
    hi = max((0,) + levels)
    out = Lattice.standard(G.n)
    for j in range(lo + 1, hi + 1):
        out = intersect(out, _power_lattice(G, j))
    return out


def h1_member(G: GroupDatum, v: Sequence[int]) -> bool:
    """``v in L or v in AL``."""
    if len(v) != G.n:
        raise DimensionError(f"vector must have length {G.n}")
    return lattice_member(G.L, v) or lattice_member(G.AL, v)


def k_embed(G: GroupDatum, w: Word) -> tuple[Fraction, ...]:
    """``phi(w) = sum A^alpha v`` for ``L = Z^n`` and ``psi(w) = 0``."""
    if not G.L.is_standard():
        raise PreconditionError("k_embed needs L = Z^n")
    _require_psi_zero(w)
    _check_word(G, w)
    total = [Fraction(0)] * G.n
    for alpha, v in _level_scan(w):
        image = (G.A**alpha) @ v
        total = [a + b for a, b in zip(total, image)]
    return tuple(total)


class GroupClass(Enum):
    POLYCYCLIC = "polycyclic"
    METABELIAN = "metabelian_not_polycyclic"
    NON_METABELIAN = "non_metabelian"


@dataclass(frozen=True)
class Coarse:
    kind: GroupClass
    hirsch: int | None = None

    def __str__(self) -> str:
        if self.kind is GroupClass.POLYCYCLIC:
            return f"Polycyclic(hirsch={self.hirsch})"
        if self.kind is GroupClass.METABELIAN:
            return "MetabelianNotPolycyclic"
        return "NonMetabelian"


def coarse_class(G: GroupDatum) -> Coarse:
    full = Lattice.standard(G.n)
    l_full = is_sublattice(full, G.L)
    al_full = is_sublattice(full, G.AL)
    if l_full and al_full:
        return Coarse(GroupClass.POLYCYCLIC, G.n + 1)
    if l_full or al_full:
        return Coarse(GroupClass.METABELIAN)
    return Coarse(GroupClass.NON_METABELIAN)


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...]

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def abelianization(G: GroupDatum) -> AbelianInvariants:
    """``G^ab = Z + Z^n / (A - I)L``, read off from a Smith form."""
    D = G.A - RatMatrix.identity(G.n)
    rows = [D @ b for b in G.L.basis]
    if not all(is_integral(r) for r in rows):
        raise PreconditionError("(A - I)L is not integral")
    S, _, _ = snf(RatMatrix(rows, ncols=G.n))
    diag = [S[i, i].numerator for i in range(G.n)]
    rank = sum(1 for d in diag if d)
    return AbelianInvariants(1 + G.n - rank, tuple(d for d in diag if d > 1))
