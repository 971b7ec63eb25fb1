"""Exception hierarchy shared across the package."""


class DunklError(Exception):
    """Base class for errors raised by this package."""


class InvalidParameter(DunklError, ValueError):
    """A parameter lies outside the domain of the requested object."""


class PoleError(DunklError, ZeroDivisionError):
    """The evaluation point is a pole of the function."""


class PreconditionError(DunklError):
    """A convergence or validity condition of a series identity fails."""


class NonConvergence(DunklError, ArithmeticError):
    """An iterative method did not reach its tolerance."""
