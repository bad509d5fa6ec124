"""Exception hierarchy shared by every conekit module."""


class ConekitError(Exception):
    """Base class for all library errors."""


class InvalidInterval(ConekitError, ValueError):
    pass


class ZeroPolynomial(ConekitError, ValueError):
    pass


class FloatOverflow(ConekitError, OverflowError):
    pass


class DegenerateInterval(ConekitError, ValueError):
    """Some scaling factor 1 - tau*l*kappa is not positive on [-b, b]."""

    def __init__(self, message, b=None, max_b=None):
        super().__init__(message)
        self.b = b
        self.max_b = max_b


class PoleAtTau(ConekitError, ZeroDivisionError):
    pass


class PositivityFailure(ConekitError):
    """A constructed profile is not strictly positive on the open interval."""

    def __init__(self, message, root_count=None):
        super().__init__(message)
        self.root_count = root_count


class InternalInconsistency(ConekitError):
    pass


class DegenerateDenominator(ConekitError, ZeroDivisionError):
    pass


class NonPositiveProfile(ConekitError, ValueError):
    pass


class ParseError(ConekitError, ValueError):
    """Config could not be read; ``field`` names the offending entry."""

    def __init__(self, message, field=None):
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field
