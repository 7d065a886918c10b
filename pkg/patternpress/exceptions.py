"""
Exceptions raised by patternpress.

All errors derive from :class:`PatternpressError`, so callers (notably the
command-line interface) can catch a single type. Most also derive from the
builtin exception a caller would naturally expect (e.g., ``ValueError`` for bad
arguments).
"""


class PatternpressError(Exception):
    """Base class for all patternpress errors."""


class InvalidPattern(PatternpressError, ValueError):
    """A symbol sequence is not a restricted-growth string.

    Parameters
    ----------
    position : int
        1-based index of the first offending symbol.
    reason : str, optional
        Human-readable description of the violation.
    """

    def __init__(self, position, reason=None):
        self.position = position
        self.reason = reason
        msg = f"invalid pattern at position {position}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)


class TooLarge(PatternpressError, ValueError):
    """A request exceeds an exhaustive-computation guard."""

    def __init__(self, what, value, limit):
        self.value = value
        self.limit = limit
        super().__init__(f"{what} = {value} exceeds the guard of {limit}")


class DomainError(PatternpressError, ValueError):
    """An argument lies outside the domain where a model or bound is defined."""


class ZeroProbability(PatternpressError, RuntimeError):
    """The coder was asked to code a symbol with zero quantized mass."""


class CorruptStream(PatternpressError, ValueError):
    """A coded artifact is malformed, truncated or fails its checksum."""


class UnknownVersion(CorruptStream):
    """A coded artifact declares a format version or estimator we don't know."""
