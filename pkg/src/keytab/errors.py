"""Exception hierarchy.

Every error raised on bad input derives from :class:`KeyTabError`, which is a
``ValueError`` so callers that only care about "bad value" can catch that.
"""


class KeyTabError(ValueError):
    """Base class for all input errors raised by keytab."""


# tableaux and shapes
class NonSSYT(KeyTabError):
    pass


class RaggedShape(KeyTabError):
    pass


class EntryOutOfRange(KeyTabError):
    pass


class ShapeTooTall(KeyTabError):
    pass


class NotKeyTableau(KeyTabError):
    pass


class EmptyTableau(KeyTabError):
    pass


class NotAPermutation(KeyTabError):
    pass


# orders
class CardinalityMismatch(KeyTabError):
    pass


class SizeMismatch(KeyTabError):
    pass


# lifts
class GammaInA(KeyTabError):
    pass


class OrderViolated(KeyTabError):
    pass


class PreconditionViolated(KeyTabError):
    pass


class EnumerationTooLarge(KeyTabError):
    pass


class NoCandidate(KeyTabError):
    pass


class NonUniqueExtremum(AssertionError):
    """Raised by the brute-force lift when the extremum is not unique.

    This can only happen if the enumeration is wrong, so it is an
    ``AssertionError`` rather than an input error.
    """


# keys
class StageOutOfRange(KeyTabError):
    pass


# oracles
class IncompatibleSkewShape(KeyTabError):
    pass


class NoNegativeEntry(KeyTabError):
    pass


class ShapeMismatch(AssertionError):
    """An oracle produced a key whose shape differs from its input."""
