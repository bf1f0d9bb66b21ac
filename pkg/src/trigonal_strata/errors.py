"""Exception hierarchy shared by every module."""


class StrataError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(StrataError, ValueError):
    """Input data violates a stated invariant (parity, range, emptiness)."""


class IncomparableError(StrataError, ValueError):
    """Two splitting types of different rank or total degree were compared."""


class OutOfRangeError(StrataError, ValueError):
    """A formula was queried outside the range where it is established."""


class ContractError(StrataError, ValueError):
    """An operation was called outside the regime it is defined for."""


class NotApplicableError(ContractError):
    """A class formula was requested for a stratum of unexpected dimension."""


class ResourceError(StrataError, RuntimeError):
    """An enumeration would exceed its size guard."""


class ConsistencyError(StrataError, RuntimeError):
    """Two independent computations of the same quantity disagree."""
