"""Isomorphism decisions between groups G(A, L).

Two data G(A, L) and G(A', L') of equal rank are isomorphic exactly when one
of three conditions holds:

(I)   some B in GL_n(Z) has A' = B A B^-1, L' = B L, or A' = B A^-1 B^-1,
      L' = B A L;
(II)  both groups are metabelian and, after replacing (A, L) by
      (A^-1, AL) where needed so that L = Z^n, some B in GL_n(Q) has
      A' = B A B^-1 and the union modules agree: M(A) = B^-1 M(A');
(III) both groups are polycyclic and A, A' are GL_n(Z)-conjugate to
      [[1, 0], [u, C]] and [[1, 0], [u, C^q]] with C of finite order m and
      gcd(q, m) = 1.

No height bound on B is known, so :func:`decide_iso` runs cheap invariant
filters and then a bounded witness search, and may answer ``unknown``.
Every ``iso`` answer carries a witness that :func:`verify_witness` accepts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Iterable, Iterator, Sequence, Union

from .errors import DimensionError, PreconditionError, WitnessError
from .exactla import RatMatrix, conjugator_space, frobenius_form, hnf, matrix_order, nullspace
from .lattice import Lattice, apply_matrix, index_in_standard, union_condition
from .lmgroup import (
    GroupClass,
    GroupDatum,
    abelianization,
    coarse_class,
    element_equal,
)
from .words import Stable, Word, commutator

__all__ = [
    "Budget",
    "BudgetReport",
    "Certificate",
    "CondI",
    "CondII",
    "CondIII",
    "GeneratorMap",
    "IsoVerdict",
    "apply_map",
    "bs_classify",
    "build_generator_map",
    "construct_pair_iii",
    "decide_iso",
    "verdict_from_json",
    "verify_homomorphism",
    "verify_witness",
    "witness_from_json",
]


def bs_classify(p: int, q: int, p_bar: int, q_bar: int) -> bool:
    """BS(p, q) = BS(p', q') iff {p', q'} = {e p, e q} for a sign e."""
    if 0 in (p, q, p_bar, q_bar):
        raise PreconditionError("Baumslag-Solitar parameters must be nonzero")
    target = sorted((p_bar, q_bar))
    return any(sorted((e * p, e * q)) == target for e in (1, -1))


# witnesses and certificates


@dataclass(frozen=True)
class CondI:
    B: RatMatrix
    epsilon: int = 1

    def to_json(self) -> dict:
        return {"condition": "I", "B": self.B.to_strings(), "epsilon": self.epsilon}


@dataclass(frozen=True)
class CondII:
    """``flips[k]`` records that side ``k`` was replaced by ``(A^-1, AL)``."""

    B: RatMatrix
    flips: tuple[bool, bool] = (False, False)

    def to_json(self) -> dict:
        return {"condition": "II", "B": self.B.to_strings(), "flips": list(self.flips)}


@dataclass(frozen=True)
class CondIII:
    P: RatMatrix
    P_bar: RatMatrix
    C: RatMatrix
    u: tuple[int, ...]
    q: int
    m: int

    def to_json(self) -> dict:
        return {
            "condition": "III",
            "P": self.P.to_strings(),
            "P_bar": self.P_bar.to_strings(),
            "C": self.C.to_strings(),
            "u": list(self.u),
            "q": self.q,
            "m": self.m,
        }


Witness = Union[CondI, CondII, CondIII]


def _matrix_from_json(rows, n: int | None = None) -> RatMatrix:
    if not isinstance(rows, list):
        raise WitnessError("matrix must be a list of rows")
    return RatMatrix(rows, ncols=n if not rows else None)


def witness_from_json(obj: dict) -> Witness:
    try:
        kind = obj["condition"]
        if kind == "I":
            return CondI(_matrix_from_json(obj["B"]), int(obj["epsilon"]))
        if kind == "II":
            f = obj["flips"]
            return CondII(_matrix_from_json(obj["B"]), (bool(f[0]), bool(f[1])))
        if kind == "III":
            C = obj["C"]
            return CondIII(
                _matrix_from_json(obj["P"]),
                _matrix_from_json(obj["P_bar"]),
                _matrix_from_json(C, 0),
                tuple(int(x) for x in obj["u"]),
                int(obj["q"]),
                int(obj["m"]),
            )
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise WitnessError(f"malformed witness: {exc}") from exc
    raise WitnessError(f"unknown condition {kind!r}")


CERTIFICATE_KINDS = ("rank", "coarse_class", "abelianization", "q_conjugacy", "index_profile")


@dataclass(frozen=True)
class Certificate:
    """A distinguishing invariant and its values on the two groups.

    ``also`` lists the other cheap invariants that differ as well.
    """

    kind: str
    values: tuple
    also: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {"kind": self.kind, "values": list(self.values), "also": list(self.also)}


@dataclass(frozen=True)
class Budget:
    height: int = 5
    max_candidates: int = 10**6
    iii_height: int = 3
    iii_max_n: int = 3


@dataclass
class BudgetReport:
    height: int
    max_candidates: int
    candidates: dict[str, int] = field(default_factory=dict)
    exhausted: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "height": self.height,
            "max_candidates": self.max_candidates,
            "candidates": dict(self.candidates),
            "exhausted": list(self.exhausted),
        }


@dataclass(frozen=True)
class IsoVerdict:
    verdict: str  # "iso" | "not_iso" | "unknown"
    witness: Witness | None = None
    certificate: Certificate | None = None
    report: BudgetReport | None = None

    @property
    def is_iso(self) -> bool:
        return self.verdict == "iso"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "witness": self.witness.to_json() if self.witness else None,
            "certificate": self.certificate.to_json() if self.certificate else None,
            "budget": self.report.to_json() if self.report else None,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def verdict_from_json(obj: dict) -> IsoVerdict:
    cert = obj.get("certificate")
    rep = obj.get("budget")
    return IsoVerdict(
        obj["verdict"],
        witness_from_json(obj["witness"]) if obj.get("witness") else None,
        Certificate(cert["kind"], tuple(cert["values"]), tuple(cert.get("also", ())))
        if cert
        else None,
        BudgetReport(rep["height"], rep["max_candidates"], dict(rep["candidates"]), list(rep["exhausted"]))
        if rep
        else None,
    )


# verification


def _is_unimodular_int(M: RatMatrix, n: int) -> bool:
    return M.shape == (n, n) and M.is_integer() and abs(M.det()) == 1


def _check_cond_i(G1: GroupDatum, G2: GroupDatum, B: RatMatrix, epsilon: int) -> bool:
    n = G1.n
    if not _is_unimodular_int(B, n):
        return False
    if epsilon == 1:
        return G2.A @ B == B @ G1.A and G2.L == apply_matrix(B, G1.L)
    return G2.A @ B == B @ G1.A_inv and G2.L == apply_matrix(B, G1.AL)


def _normalized(G: GroupDatum, flip: bool) -> tuple[RatMatrix, Lattice]:
    return (G.A_inv, G.AL) if flip else (G.A, G.L)


def _check_cond_ii(G1: GroupDatum, G2: GroupDatum, w: CondII) -> bool:
    n = G1.n
    full = Lattice.standard(n)
    for G in (G1, G2):
        if G.L != full and G.AL != full:
            return False
    A1, L1 = _normalized(G1, w.flips[0])
    A2, L2 = _normalized(G2, w.flips[1])
    if L1 != full or L2 != full or not (A1.is_integer() and A2.is_integer()):
        return False
    B = w.B
    if B.det() == 0 or A2 @ B != B @ A1:
        return False
    return union_condition(A1, A2, B)


def _check_cond_iii(G1: GroupDatum, G2: GroupDatum, w: CondIII) -> bool:
    n = G1.n
    full = Lattice.standard(n)
    if not all(lat == full for lat in (G1.L, G1.AL, G2.L, G2.AL)):
        return False
    if not (_is_unimodular_int(w.P, n) and _is_unimodular_int(w.P_bar, n)):
        return False
    if not w.C.is_integer():
        return False
    if matrix_order(w.C) != w.m or gcd(w.q, w.m) != 1:
        return False
    return w.P @ G1.A @ w.P.inverse() == RatMatrix.block_lower(w.u, w.C) and (
        w.P_bar @ G2.A @ w.P_bar.inverse() == RatMatrix.block_lower(w.u, w.C**w.q)
    )


def verify_witness(G1: GroupDatum, G2: GroupDatum, w: Witness) -> bool:
    """Check a witness against the stated condition, exactly."""
    if G1.n != G2.n:
        raise DimensionError("groups have different rank")
    n = G1.n
    if isinstance(w, CondI):
        if w.epsilon not in (1, -1):
            raise WitnessError("epsilon must be +1 or -1")
        if w.B.shape != (n, n):
            raise WitnessError(f"B must be {n}x{n}")
        return _check_cond_i(G1, G2, w.B, w.epsilon)
    if isinstance(w, CondII):
        if w.B.shape != (n, n) or len(w.flips) != 2:
            raise WitnessError(f"B must be {n}x{n} with two flip flags")
        return _check_cond_ii(G1, G2, w)
    if isinstance(w, CondIII):
        if n < 1 or w.P.shape != (n, n) or w.P_bar.shape != (n, n):
            raise WitnessError(f"P and P_bar must be {n}x{n}")
        if w.C.shape != (n - 1, n - 1) or len(w.u) != n - 1:
            raise WitnessError(f"C must be {n - 1}x{n - 1} and u of length {n - 1}")
        if w.m < 1:
            raise WitnessError("m must be positive")
        return _check_cond_iii(G1, G2, w)
    raise WitnessError(f"not a witness: {type(w).__name__}")


# explicit maps for condition (I)


@dataclass(frozen=True)
class GeneratorMap:
    """Images of ``x_1, ..., x_n`` and ``t``."""

    x_images: tuple[Word, ...]
    t_image: Word

    def to_json(self) -> dict:
        return {"x": [str(w) for w in self.x_images], "t": str(self.t_image)}


def build_generator_map(G1: GroupDatum, G2: GroupDatum, w: CondI) -> GeneratorMap:
    """``x^v -> x^(Bv)`` and ``t -> t^epsilon``."""
    if not isinstance(w, CondI):
        raise WitnessError("explicit maps exist only for condition (I) witnesses")
    if not verify_witness(G1, G2, w):
        raise WitnessError("witness rejected")
    cols = w.B.columns()
    return GeneratorMap(
        tuple(Word.gen([int(x) for x in c]) for c in cols),
        Word.t(w.epsilon),
    )


def apply_map(images: GeneratorMap, w: Word) -> Word:
    out = Word()
    for let in w:
        if isinstance(let, Stable):
            out = out * (images.t_image if let.e == 1 else images.t_image.inverse())
        else:
            for img, k in zip(images.x_images, let.v):
                if k:
                    out = out * img**k
    return out


def verify_homomorphism(G1: GroupDatum, G2: GroupDatum, images: GeneratorMap) -> bool:
    """Check that the generator images satisfy every defining relation of G1 in G2."""
    n = G1.n
    if len(images.x_images) != n:
        raise DimensionError(f"need {n} generator images, got {len(images.x_images)}")
    xs = images.x_images
    for i in range(n):
        for j in range(i + 1, n):
            if not element_equal(G2, commutator(xs[i], xs[j]), Word()):
                return False
    for b in G1.L.basis:
        v = [int(x) for x in b]
        Av = [int(x) for x in G1.A @ v]
        lhs = apply_map(images, Word.t(1) * Word.gen(v) * Word.t(-1))
        if not element_equal(G2, lhs, apply_map(images, Word.gen(Av))):
            return False
    return True


# condition (III) pairs


def construct_pair_iii(C: RatMatrix, u: Sequence[int], q: int) -> tuple[RatMatrix, RatMatrix]:
    """``([[1, 0], [u, C]], [[1, 0], [u, C^q]])`` for ``C`` of finite order coprime to ``q``."""
    if not C.is_square or not C.is_integer():
        raise PreconditionError("C must be a square integer matrix")
    if len(u) != C.nrows:
        raise DimensionError("u must have one entry per row of C")
    m = matrix_order(C)
    if m is None:
        raise PreconditionError("C has infinite order")
    if gcd(q, m) != 1:
        raise PreconditionError(f"gcd(q, m) = gcd({q}, {m}) != 1")
    return RatMatrix.block_lower(u, C), RatMatrix.block_lower(u, C**q)


# filters


def _frob_str(M: RatMatrix) -> list[str]:
    return [str(f) for f in frobenius_form(M)]


def _index_profile(G: GroupDatum) -> tuple[int, int]:
    return index_in_standard(G.L), index_in_standard(G.AL)


def _filters(G1: GroupDatum, G2: GroupDatum) -> list[Certificate]:
    """All differing cheap invariants, in pipeline order."""
    if G1.n != G2.n:
        return [Certificate("rank", (G1.n, G2.n))]
    out = []
    c1, c2 = coarse_class(G1), coarse_class(G2)
    if c1 != c2:
        out.append(Certificate("coarse_class", (str(c1), str(c2))))
    a1, a2 = abelianization(G1), abelianization(G2)
    if a1 != a2:
        out.append(Certificate("abelianization", (str(a1), str(a2))))
    f2 = frobenius_form(G2.A)
    if f2 != frobenius_form(G1.A) and f2 != frobenius_form(G1.A_inv):
        out.append(
            Certificate(
                "q_conjugacy",
                ({"A": _frob_str(G1.A), "A_inv": _frob_str(G1.A_inv)}, {"A": _frob_str(G2.A)}),
            )
        )
    if c1 == c2 and c1.kind is GroupClass.NON_METABELIAN:
        p1, p2 = _index_profile(G1), _index_profile(G2)
        if p2 != p1 and p2 != p1[::-1]:
            out.append(Certificate("index_profile", (list(p1), list(p2))))
    return out


# bounded enumeration


def _int_values(h: int) -> list[int]:
    out = [0]
    for k in range(1, h + 1):
        out += [k, -k]
    return out


def _rat_height(x: Fraction) -> int:
    return 0 if x == 0 else max(abs(x.numerator), x.denominator)


def _rat_values(h: int) -> list[Fraction]:
    vals = {Fraction(p, q) for q in range(1, h + 1) for p in range(-h, h + 1)}
    return sorted(vals, key=lambda x: (_rat_height(x), x.denominator, abs(x.numerator), x < 0))


def _shells(values: list, k: int, height) -> Iterator[tuple]:
    """Coefficient vectors in order of max height, then lexicographically by value rank."""
    if k == 0:
        return
    top = max((height(v) for v in values), default=0)
    for s in range(1, top + 1):
        vals = [v for v in values if height(v) <= s]
        for c in product(vals, repeat=k):
            if max(height(v) for v in c) == s:
                yield c


class _Search:
    def __init__(self, budget: Budget, report: BudgetReport, label: str):
        self.budget = budget
        self.report = report
        self.label = label
        report.candidates.setdefault(label, 0)

    def take(self) -> bool:
        """Count one candidate; False once the cap is reached."""
        if self.report.candidates[self.label] >= self.budget.max_candidates:
            return False
        self.report.candidates[self.label] += 1
        return True

    def done(self) -> None:
        if self.label not in self.report.exhausted:
            self.report.exhausted.append(self.label)


def _space_points(basis: list[RatMatrix], coeffs: Iterable[tuple]) -> Iterator[RatMatrix]:
    if not basis:
        return
    n = basis[0].nrows
    flat = [list(b.entries()) for b in basis]
    for c in coeffs:
        entries = [sum(ci * b[e] for ci, b in zip(c, flat) if ci) for e in range(n * n)]
        yield RatMatrix([entries[i * n:(i + 1) * n] for i in range(n)], ncols=n)


def _search_cond_i(G1: GroupDatum, G2: GroupDatum, budget: Budget, report: BudgetReport) -> CondI | None:
    s = _Search(budget, report, "I")
    identity = RatMatrix.identity(G1.n)
    for eps in (1, -1):
        if not s.take():
            s.done()
            return None
        if _check_cond_i(G1, G2, identity, eps):
            return CondI(identity, eps)
    values = _int_values(budget.height)
    for eps in (1, -1):
        basis = conjugator_space(G1.A, G2.A, eps)
        for X in _space_points(basis, _shells(values, len(basis), abs)):
            if not s.take():
                s.done()
                return None
            if _check_cond_i(G1, G2, X, eps):
                return CondI(X, eps)
    s.done()
    return None


def _search_cond_ii(G1: GroupDatum, G2: GroupDatum, budget: Budget, report: BudgetReport) -> CondII | None:
    s = _Search(budget, report, "II")
    full = Lattice.standard(G1.n)
    flips = (G1.L != full, G2.L != full)
    A1, _ = _normalized(G1, flips[0])
    A2, _ = _normalized(G2, flips[1])
    basis = conjugator_space(A1, A2, 1)
    points = _space_points(basis, _shells(_rat_values(budget.height), len(basis), _rat_height))
    for X in _chain([RatMatrix.identity(G1.n)], points):
        if not s.take():
            s.done()
            return None
        w = CondII(X, flips)
        if A2 @ X == X @ A1 and X.det() != 0 and _check_cond_ii(G1, G2, w):
            return w
    s.done()
    return None


def _chain(first: list, rest: Iterator) -> Iterator:
    yield from first
    yield from rest


def _fixed_rows(A: RatMatrix, h: int) -> Iterator[tuple[int, ...]]:
    """Primitive integer rows ``r`` with ``r A = r``, first nonzero entry positive."""
    n = A.nrows
    basis = nullspace((A - RatMatrix.identity(n)).T)
    if not basis:
        return
    seen = set()
    for c in _shells(_int_values(h), len(basis), abs):
        r = [sum(ci * b[i] for ci, b in zip(c, basis)) for i in range(n)]
        if any(x.denominator != 1 for x in r):
            continue
        r = [int(x) for x in r]
        g = 0
        for x in r:
            g = gcd(g, x)
        if g != 1 or max(abs(x) for x in r) > h:
            continue
        first = next(x for x in r if x)
        if first < 0:
            continue
        t = tuple(r)
        if t not in seen:
            seen.add(t)
            yield t


def _completion(r: tuple[int, ...]) -> RatMatrix:
    """A unimodular integer matrix whose first row is the primitive vector ``r``."""
    _, U = hnf(RatMatrix([[x] for x in r], ncols=1))
    P = U.inverse().T
    assert P.row(0) == tuple(Fraction(x) for x in r)
    return P


def _search_cond_iii(G1: GroupDatum, G2: GroupDatum, budget: Budget, report: BudgetReport) -> CondIII | None:
    s = _Search(budget, report, "III")
    n = G1.n
    if not 2 <= n <= budget.iii_max_n:
        s.done()
        return None
    h = min(budget.height, budget.iii_height)
    values = _int_values(h)
    for r in _fixed_rows(G1.A, h):
        P = _completion(r)
        X = P @ G1.A @ P.inverse()
        u = tuple(int(x) for x in X.col(0)[1:])
        C = X.submatrix(range(1, n), range(1, n))
        m = matrix_order(C)
        if m is None:
            continue
        for q in range(1, max(m, 2)):
            if gcd(q, m) != 1:
                continue
            target = RatMatrix.block_lower(u, C**q)
            basis = conjugator_space(G2.A, target, 1)
            for Pb in _space_points(basis, _shells(values, len(basis), abs)):
                if not s.take():
                    s.done()
                    return None
                if Pb.is_integer() and abs(Pb.det()) == 1:
                    w = CondIII(P, Pb, C, u, q, m)
                    if _check_cond_iii(G1, G2, w):
                        return w
    s.done()
    return None


_SEARCHES = {"I": _search_cond_i, "II": _search_cond_ii, "III": _search_cond_iii}


def decide_iso(
    G1: GroupDatum,
    G2: GroupDatum,
    budget: Budget | None = None,
    conditions: Sequence[str] | None = None,
) -> IsoVerdict:
    """Filters first, then bounded witness searches by coarse class.

    ``conditions`` restricts which witness searches run (default: all that apply).
    """
    budget = budget or Budget()
    report = BudgetReport(budget.height, budget.max_candidates)
    certs = _filters(G1, G2)
    if certs:
        first = certs[0]
        return IsoVerdict(
            "not_iso",
            certificate=Certificate(first.kind, first.values, tuple(c.kind for c in certs[1:])),
            report=report,
        )
    kind = coarse_class(G1).kind
    plan = {
        GroupClass.NON_METABELIAN: ("I",),
        GroupClass.METABELIAN: ("II",),
        GroupClass.POLYCYCLIC: ("I", "III"),
    }[kind]
    if conditions is not None:
        plan = tuple(c for c in plan if c in conditions)
    for label in plan:
        w = _SEARCHES[label](G1, G2, budget, report)
        if w is not None:
            if not verify_witness(G1, G2, w):
                raise AssertionError("search produced an unverifiable witness")
            return IsoVerdict("iso", witness=w, report=report)
    return IsoVerdict("unknown", report=report)
