"""Errors raised by the library.

Library code raises; the command line converts these into exit codes.
"""


class BetaforgeError(Exception):
    """Base class for every error raised by betaforge."""


# exact arithmetic
class EndpointRootError(BetaforgeError):
    """A Sturm count endpoint is itself a root of the polynomial."""

    def __init__(self, endpoint):
        super().__init__("polynomial vanishes at endpoint {}".format(endpoint))
        self.endpoint = endpoint


class ContextMismatchError(BetaforgeError):
    """Two values from different number fields were combined."""


# subdivision polynomials
class InvalidPolynomialError(BetaforgeError):
    """Coefficients do not describe a usable subdivision polynomial."""


class AllZeroCoefficientsError(InvalidPolynomialError):
    pass


class TrivialPolynomialError(InvalidPolynomialError):
    pass


class NegativeCoefficientError(InvalidPolynomialError):
    pass


class CaretEnumerationError(BetaforgeError):
    """Caret shape count is above the configured enumeration cap."""


# representability
class DimensionMismatchError(BetaforgeError):
    pass


class NoCycleError(BetaforgeError):
    """No repeated boolean pattern was found within the iteration bound."""


# piecewise linear maps
class InvalidPartitionError(BetaforgeError):
    pass


class UnsupportedSubringError(BetaforgeError):
    """No breakpoint membership oracle exists for the requested group."""


class InvalidArrangementError(BetaforgeError):
    pass


# tree pairs
class UnrepresentableError(BetaforgeError):
    """No caret tree within the depth bound realizes a partition."""

    def __init__(self, message, breakpoint=None):
        super().__init__(message)
        self.breakpoint = breakpoint


class RefinementBudgetError(BetaforgeError):
    pass


class NoCommonRefinementError(BetaforgeError):
    pass


class IndivisibleLegError(BetaforgeError):
    pass


class NotTreePairDefinableError(BetaforgeError):
    pass


# serialization
class CodecError(BetaforgeError):
    pass
