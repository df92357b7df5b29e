"""Reading and writing group data files.

A datum file is a JSON object ``{"n": 2, "A": [["0", 1], [8, 0]], "L": [[1, 0], [0, 1]]}``;
matrix entries are ints or ``"p/q"`` strings and the rows of ``L`` generate
the lattice.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import DatumError
from .lmgroup import GroupDatum, validate_datum


def datum_from_obj(obj) -> GroupDatum:
    if not isinstance(obj, dict):
        raise DatumError("datum must be a JSON object")
    missing = [k for k in ("n", "A", "L") if k not in obj]
    if missing:
        raise DatumError(f"datum is missing {', '.join(missing)}")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DatumError("n must be a non-negative integer")
    A, L = obj["A"], obj["L"]
    if not isinstance(A, list) or not all(isinstance(r, list) for r in A):
        raise DatumError("A must be a list of rows")
    if not isinstance(L, list) or not all(isinstance(r, list) for r in L):
        raise DatumError("L must be a list of rows")
    for r in L:
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in r):
            raise DatumError("L entries must be integers")
    for r in A:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, (int, str)):
                raise DatumError(f"A entries must be ints or 'p/q' strings, got {x!r}")
    return validate_datum(n, A, L)


def load_datum(path: str | Path) -> GroupDatum:
    """Parse a datum file. Malformed JSON raises ``json.JSONDecodeError``."""
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    return datum_from_obj(obj)


def _entry(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def datum_to_obj(G: GroupDatum) -> dict:
    return {
        "n": G.n,
        "A": [[_entry(x) for x in row] for row in G.A.rows],
        "L": [list(r) for r in G.L.H],
    }


def dump_datum(G: GroupDatum, path: str | Path) -> None:
    Path(path).write_text(json.dumps(datum_to_obj(G)) + "\n", encoding="utf-8")
