"""Exact computations in the groups G(A, L) = <Z^n, t | t x^v t^-1 = x^(Av), v in L>."""

from .errors import (
    BallTooLargeError,
    DatumError,
    LMGError,
    NotConjugatorError,
    NotFullRankError,
    PreconditionError,
    WitnessError,
    WordArityError,
    WordSyntaxError,
)
from .exactla import RatMatrix
from .iso import Budget, CondI, CondII, CondIII, IsoVerdict, bs_classify, decide_iso, verify_witness
from .lattice import Lattice, lattice_canonical
from .lmgroup import (
    GroupDatum,
    abelianization,
    britton_reduce,
    coarse_class,
    cyclic_reduce,
    element_equal,
    parse_word,
    validate_datum,
)
from .words import Gen, Stable, Word

__version__ = "0.1.0"

__all__ = [
    "BallTooLargeError",
    "Budget",
    "CondI",
    "CondII",
    "CondIII",
    "DatumError",
    "Gen",
    "GroupDatum",
    "IsoVerdict",
    "LMGError",
    "Lattice",
    "NotConjugatorError",
    "NotFullRankError",
    "PreconditionError",
    "RatMatrix",
    "Stable",
    "WitnessError",
    "Word",
    "WordArityError",
    "WordSyntaxError",
    "abelianization",
    "britton_reduce",
    "bs_classify",
    "coarse_class",
    "cyclic_reduce",
    "decide_iso",
    "element_equal",
    "lattice_canonical",
    "parse_word",
    "validate_datum",
    "verify_witness",
]
