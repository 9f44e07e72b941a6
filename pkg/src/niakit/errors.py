"""Exception types shared across the toolkit."""


class NiakitError(Exception):
    """Base class for all toolkit errors."""


class EncodingMismatch(NiakitError):
    """A solver was asked to operate on an encoding kind it does not support."""


class InvalidBudget(NiakitError):
    """A run budget sets neither an evaluation nor an iteration limit."""


class SchemaError(NiakitError):
    """A data file does not conform to its documented schema."""


class IllegalPath(NiakitError):
    """A classification path names a child that is not legal under its parent."""


class NotFound(NiakitError):
    """Lookup by name or alias matched no taxonomy entry."""


class UnmappedDescriptor(NiakitError):
    """No rule in the rule table matches the problem descriptor."""


class CapacityOverflow(NiakitError):
    """The dynamic-programming table would exceed the configured memory cap."""


class TooLarge(NiakitError):
    """Instance exceeds the enforced size cap of an exact enumeration method."""


class InvalidTour(NiakitError):
    """A tour is not a permutation of all cities."""


class NonPositiveSeries(NiakitError):
    """A multiplicative-model series contains values <= 0."""


class TooShortSeries(NiakitError):
    """A series is shorter than the two full seasons needed for initialization."""


class OutOfBounds(NiakitError):
    """A point lies outside the declared box of a test function."""


class IoError(NiakitError):
    """Reading or writing a report file failed."""
