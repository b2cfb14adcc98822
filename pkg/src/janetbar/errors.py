"""Exception hierarchy."""


class JanetBarError(Exception):
    """Base class for every error raised by the package."""


class DimensionError(JanetBarError, ValueError):
    """Terms, orderings or ranks disagree on the number of variables."""


class DuplicateTermError(JanetBarError, ValueError):
    """A term set was given the same exponent vector twice."""


class EmptyTermSetError(JanetBarError, ValueError):
    """An analysis entry point was handed an empty term set."""


class MalformedBarCodeError(JanetBarError, ValueError):
    """A bar code violates the nesting or equal-length conditions."""


class NotAdmissibleError(JanetBarError, ValueError):
    """The operation needs an order ideal but the bar code decodes to something else.

    ``witness`` holds ``(term, divisor)`` where ``divisor`` divides ``term``
    but is missing from the set, when one is known.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CapExceededError(JanetBarError, ValueError):
    """Exhaustive enumeration refused because ``n`` is above the configured cap."""


class InternalInvariantError(JanetBarError, RuntimeError):
    """Two independent routes disagreed, or a proven invariant failed."""


class ParseError(JanetBarError, ValueError):
    """Malformed term text. ``line`` and ``column`` are 1-based."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.reason = message
