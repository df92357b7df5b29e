"""Words over ``{x^v : v in Z^n} ∪ {t, t^-1}`` and their text grammar.

Grammar (tokens may be separated by whitespace)::

    word   := token*
    token  := "t" ["^" int] | "x[" int ("," int)* "]" ["^" int]

``x[1,2]^3`` is the generator letter ``x^(3,6)``; ``t^-2`` expands to two
``t^-1`` letters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .errors import WordArityError, WordSyntaxError


@dataclass(frozen=True, slots=True)
class Gen:
    v: tuple[int, ...]

    def __str__(self) -> str:
        return "x[" + ",".join(str(a) for a in self.v) + "]"


@dataclass(frozen=True, slots=True)
class Stable:
    e: int

    def __str__(self) -> str:
        return "t" if self.e == 1 else "t^-1"


Letter = Union[Gen, Stable]


def _normalize(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for let in letters:
        if isinstance(let, Gen):
            v = let.v
            if out and isinstance(out[-1], Gen):
                v = tuple(a + b for a, b in zip(out.pop().v, v))
            if any(v):
                out.append(Gen(v))
        else:
            if let.e not in (1, -1):
                raise ValueError("stable letters have exponent +1 or -1")
            out.append(let)
    return tuple(out)


class Word:
    """An immutable word; adjacent generator letters are merged, ``x^0`` dropped.

    Normalization does not cancel ``t t^-1``: that is a Britton pinch and is
    left to :func:`lmg.lmgroup.britton_reduce`.
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        self.letters: tuple[Letter, ...] = _normalize(letters)

    @classmethod
    def gen(cls, v: Sequence[int]) -> "Word":
        return cls([Gen(tuple(int(a) for a in v))])

    @classmethod
    def t(cls, k: int = 1) -> "Word":
        e = 1 if k > 0 else -1
        return cls([Stable(e)] * abs(k))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(
            Gen(tuple(-a for a in let.v)) if isinstance(let, Gen) else Stable(-let.e)
            for let in reversed(self.letters)
        )

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else self.inverse()
        return Word(base.letters * abs(k))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    @property
    def psi(self) -> int:
        return sum(let.e for let in self.letters if isinstance(let, Stable))

    @property
    def stable_count(self) -> int:
        return sum(1 for let in self.letters if isinstance(let, Stable))

    def __str__(self) -> str:
        parts: list[str] = []
        i = 0
        letters = self.letters
        while i < len(letters):
            let = letters[i]
            if isinstance(let, Gen):
                parts.append(str(let))
                i += 1
                continue
            j = i
            while j < len(letters) and letters[j] == let:
                j += 1
            k = (j - i) * let.e
            parts.append("t" if k == 1 else f"t^{k}")
            i = j
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def commutator(a: Word, b: Word) -> Word:
    """``[a, b] = a b a^-1 b^-1``."""
    return a * b * a.inverse() * b.inverse()


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | t(?:\^(?P<texp>[+-]?\d+))?
  | x\[(?P<vec>[^\]]*)\](?:\^(?P<xexp>[+-]?\d+))?
    """,
    re.VERBOSE,
)
_INT = re.compile(r"\s*[+-]?\d+\s*\Z")


def parse_word(text: str, n: int) -> Word:
    """Parse ``text`` into a :class:`Word` for a group of rank ``n``."""
    letters: list[Letter] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise WordSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.group("ws") is None:
            if m.group("vec") is not None:
                fields = m.group("vec").split(",")
                if not all(_INT.match(f) for f in fields):
                    raise WordSyntaxError("generator entries must be integers", m.start("vec"))
                if len(fields) != n:
                    raise WordArityError(
                        f"generator has {len(fields)} entries, expected {n}", pos
                    )
                k = int(m.group("xexp") or 1)
                letters.append(Gen(tuple(k * int(f) for f in fields)))
            else:
                k = int(m.group("texp") or 1)
                letters.extend([Stable(1 if k > 0 else -1)] * abs(k))
        pos = m.end()
    return Word(letters)
