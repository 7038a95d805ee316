"""Exception types raised by seqbell."""


class SeqBellError(ValueError):
    """Base class for all validation errors in this package."""


class DegenerateState(SeqBellError):
    """The requested state vector is null and cannot be normalized."""


class ParamOutOfRange(SeqBellError):
    """A basis parameter lies outside [0, 1]."""


class InvalidDensity(SeqBellError):
    """A matrix is not a valid density operator (hermitian, PSD, unit trace)."""


class InvalidDistribution(SeqBellError):
    """A computed probability is negative beyond floating-point dust."""
