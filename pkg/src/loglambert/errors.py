"""Exception hierarchy shared by every module of the package."""


class LogLambertError(Exception):
    """Base class for all errors raised by :mod:`loglambert`."""


class DomainError(LogLambertError, ValueError):
    """An argument lies outside the domain of the requested function."""


class SingularityError(DomainError):
    """The requested quantity is unbounded at the argument (a branch point)."""


class UncoveredRegionError(DomainError):
    """Deformation parameters fall in a region with no prescribed branch."""


class NonPhysicalRegionError(DomainError):
    """A logarithm or power argument of a heat function is non-positive."""


class ConvergenceError(LogLambertError, ArithmeticError):
    """An iterative solver did not converge within its iteration budget."""


class NumericalOverflowError(LogLambertError, OverflowError):
    """An intermediate quantity exceeds the binary64 range."""
