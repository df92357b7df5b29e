"""Exception hierarchy shared by every lmg module."""

from __future__ import annotations


class LMGError(Exception):
    """Base class for all errors raised by lmg."""


class PreconditionError(LMGError, ValueError):
    """An operation was called on input outside its domain."""


class DimensionError(PreconditionError):
    pass


class SingularMatrixError(PreconditionError):
    pass


class NotFullRankError(PreconditionError):
    def __init__(self, message: str = "not full rank"):
        super().__init__(message)


class DatumError(LMGError, ValueError):
    """The triple (n, A, L) does not define a group G(A, L)."""


class WordSyntaxError(LMGError, ValueError):
    """A word failed to parse; ``position`` is the offending character offset."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class NotConjugatorError(PreconditionError):
    def __init__(self, message: str = "not a conjugator"):
        super().__init__(message)


class WitnessError(LMGError, ValueError):
    """A witness is malformed or was rejected by its verifier."""


class BallTooLargeError(LMGError):
    pass


class WordArityError(WordSyntaxError):
    """A generator vector has the wrong number of entries."""
