class LocusError(Exception):
    """Base class for all errors raised by this package."""


class CapExceeded(LocusError):
    pass


class InvalidPermutation(LocusError, ValueError):
    pass


class NotASubgroup(LocusError, ValueError):
    pass


class NotNormal(LocusError, ValueError):
    pass


class NotClosed(LocusError, ValueError):
    pass


class IllegalThomason(LocusError, ValueError):
    pass


class SpectrumMismatch(LocusError, ValueError):
    pass


class UnknownFormat(LocusError, ValueError):
    pass


class ParseError(LocusError, ValueError):
    pass


class AmbiguousSelector(LocusError, ValueError):
    """A subgroup selector matched zero or several classes."""
