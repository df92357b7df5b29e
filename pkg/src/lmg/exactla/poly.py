"""Univariate polynomials over Q and Z.

``QPoly`` is the working type (Fraction coefficients, used for polynomial
matrix reduction); ``IntPolynomial`` is the canonical, hashable output type.
Coefficient tuples are stored lowest degree first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class QPoly:
    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):
        self.c: tuple[Fraction, ...] = _trim([Fraction(x) for x in coeffs])

    @classmethod
    def x(cls) -> "QPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, a) -> "QPoly":
        return cls((a,))

    @property
    def deg(self) -> int:
        return len(self.c) - 1

    def __bool__(self) -> bool:
        return bool(self.c)

    @property
    def lead(self) -> Fraction:
        return self.c[-1]

    def __add__(self, other: "QPoly") -> "QPoly":
        n = max(len(self.c), len(other.c))
        a = self.c + (Fraction(0),) * (n - len(self.c))
        b = other.c + (Fraction(0),) * (n - len(other.c))
        return QPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> "QPoly":
        return QPoly(-x for x in self.c)

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other) -> "QPoly":
        if not isinstance(other, QPoly):
            return QPoly(x * other for x in self.c)
        if not self.c or not other.c:
            return QPoly()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        dq = len(rem) - len(other.c)
        if dq < 0:
            return QPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        inv = 1 / other.lead
        for k in range(dq, -1, -1):
            f = rem[k + len(other.c) - 1] * inv
            quot[k] = f
            if f:
                for j, b in enumerate(other.c):
                    rem[k + j] -= f * b
        return QPoly(quot), QPoly(rem[: len(other.c) - 1])

    def __mod__(self, other: "QPoly") -> "QPoly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "QPoly") -> "QPoly":
        return divmod(self, other)[0]

    def monic(self) -> "QPoly":
        return self * (1 / self.lead) if self.c else self

    def __eq__(self, other) -> bool:
        return isinstance(other, QPoly) and self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def __repr__(self) -> str:
        return f"QPoly({[str(x) for x in self.c]})"


@dataclass(frozen=True, slots=True)
class IntPolynomial:
    """Integer polynomial, coefficients lowest degree first, no trailing zeros."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def from_rational(cls, p: QPoly) -> "IntPolynomial":
        """Primitive integer multiple of ``p`` with positive leading coefficient."""
        if not p:
            return cls(())
        d = 1
        for x in p.c:
            d = lcm(d, x.denominator)
        ints = [(x * d).numerator for x in p.c]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return cls(tuple(v // g for v in ints))

    def to_qpoly(self) -> QPoly:
        return QPoly(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                xs = "x" if k == 1 else f"x^{k}"
                body = xs if mag == 1 else f"{mag}*{xs}"
            sign = "-" if a < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPolynomial:
    """The d-th cyclotomic polynomial."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    num = QPoly([-1] + [0] * (d - 1) + [1])
    for e in range(1, d):
        if d % e == 0:
            num = num // cyclotomic(e).to_qpoly()
    return IntPolynomial.from_rational(num)


def euler_phi(d: int) -> int:
    result, m, p = d, d, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result
