"""Exception types raised across frwtk."""


class FrwtkError(Exception):
    """Base class for all library errors."""


class DomainError(FrwtkError, ValueError):
    pass


class GridMismatch(FrwtkError, ValueError):
    pass


class SingularAngle(DomainError):
    """The fractional angle is (numerically) a multiple of pi."""


class DivergentNorm(FrwtkError, ArithmeticError):
    pass


class NotAdmissible(FrwtkError, ArithmeticError):
    """The admissibility integral diverges at the origin."""


class HypothesisError(FrwtkError, ValueError):
    """Exponent relations required by an inequality do not hold."""


class CostGuardError(FrwtkError, RuntimeError):
    pass


class NoConverge(FrwtkError, ArithmeticError):
    pass


class QuadNoConverge(NoConverge):
    """Adaptive quadrature hit its subdivision limit.

    The best available estimate is kept on the exception so callers can
    decide whether it is good enough.
    """

    def __init__(self, message, value=None, est_error=None, location=None):
        super().__init__(message)
        self.value = value
        self.est_error = est_error
        self.location = location


class ConfigError(DomainError):
    """Malformed configuration or command-line specification."""


class ParseError(DomainError):
    """Malformed data file; ``lineno`` points at the offending line."""

    def __init__(self, message, path=None, lineno=None):
        where = ""
        if path is not None:
            where = f"{path}:"
        if lineno is not None:
            where += f"{lineno}:"
        super().__init__(f"{where} {message}" if where else message)
        self.path = path
        self.lineno = lineno
