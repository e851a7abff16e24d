"""Exception types raised by the library.

Every error the public API can raise deliberately derives from QlmError so
callers can catch library failures with a single except clause.
"""


class QlmError(Exception):
    """Base class for all library errors."""


class IndexOutOfRangeError(QlmError):
    """A site index lies outside the lattice {0..N-1}."""


class DuplicateIndexError(QlmError):
    """The same site index was given more than once."""


class ZeroVectorError(QlmError):
    """An all-zero amplitude vector cannot be normalized."""


class DimensionMismatchError(QlmError):
    """Operands are defined on lattices of different sizes."""


class NotNormalizedError(QlmError):
    """The operation requires a unit-norm state."""


class NotHermitianError(QlmError):
    """The operation requires a Hermitian operator."""


class TimeOutOfTableRangeError(QlmError):
    """A table potential was evaluated outside its breakpoint range."""


class EigendecompositionError(QlmError):
    """The Hermitian eigensolver failed to converge."""


class StepBudgetExceededError(QlmError):
    """An evolution would need more steps than the configured budget."""


class ParseError(QlmError):
    """A scenario document is not syntactically valid."""


class ValidationError(QlmError):
    """A scenario or configuration field has an invalid value."""


class UnknownKeyError(ValidationError):
    """A scenario document contains a key the format does not define."""
