"""Exception types raised across the package."""


class SfqhaError(Exception):
    """Base class for all errors raised here."""


class DivisionByZero(SfqhaError, ZeroDivisionError):
    pass


class InvalidBeta(SfqhaError, ValueError):
    pass


class AlgebraMismatch(SfqhaError, ValueError):
    pass


class ArityMismatch(SfqhaError, ValueError):
    pass


class SolutionSpaceDimension(SfqhaError, ArithmeticError):
    pass


class NotIdempotent(SfqhaError, ValueError):
    pass


class RelationViolation(SfqhaError, ValueError):
    pass


class NotIntertwiner(SfqhaError, ValueError):
    pass


class NotProjective(SfqhaError, ValueError):
    pass


class NotInIdeal(SfqhaError, ValueError):
    pass


class NotCentral(SfqhaError, ValueError):
    pass


class NotScalarAction(SfqhaError, ValueError):
    pass


class EvenM(SfqhaError, ValueError):
    pass


class NotCoprime(SfqhaError, ValueError):
    pass


class DimensionMismatch(SfqhaError, ArithmeticError):
    pass


class ConfigError(SfqhaError, ValueError):
    """Bad command line configuration (maps to exit status 2)."""
