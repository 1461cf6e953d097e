"""Exception hierarchy shared by all wgamma modules.

Everything derives from WGammaError so callers can catch library errors
in one place. "Signal" exceptions (EmptyGraphError and friends) mark
mathematically degenerate inputs rather than bugs.
"""


class WGammaError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(WGammaError):
    """Ring-spec text could not be parsed; carries the offending position."""

    def __init__(self, message: str, position: int = -1):
        self.position = position
        if position >= 0:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NotPrimePowerError(ParseError):
    """A factor 'Z/m' whose modulus is not a prime power (and no CRT sugar applies)."""


class RingConstructionError(WGammaError):
    """A local-ring spec violates its invariants."""


class NotPrimeError(RingConstructionError):
    """The characteristic p failed the deterministic primality test."""


class ReducibleModulusError(RingConstructionError):
    """A Galois-field modulus is reducible over Z/p."""


class NotLocalError(RingConstructionError):
    """A polynomial quotient whose non-units do not form an ideal."""


class CapExceededError(WGammaError):
    """An element-level operation was asked to enumerate beyond its cap."""


class EmptyGraphError(WGammaError):
    """The ring is a field: there are no nonzero zero-divisors, hence no graph.

    This is a signal, not a failure; the spectrum of the empty graph is
    the empty multiset.
    """


class PrimeInputError(EmptyGraphError):
    """Z/n with n prime is a field; same degenerate situation as EmptyGraphError."""


class TooFewVerticesError(WGammaError):
    """Algebraic connectivity is undefined on graphs with fewer than two vertices."""


class IsFieldError(WGammaError):
    """A socle witness was requested for a field (maximal ideal is zero)."""


class ToleranceTooSmallError(WGammaError):
    """Requested root bracket width is below what a float result can express."""


class InexactDivisionError(WGammaError):
    """An internally-exact division left a remainder; indicates a bug."""
