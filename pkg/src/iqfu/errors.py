"""Exception and warning types raised across the package."""


class IQModelError(Exception):
    """Base class for all model errors."""


class DomainError(IQModelError, ValueError):
    """An input lies outside the domain of a function or model."""


class CapacityExceeded(IQModelError):
    """The state space is too large for dense transition matrices."""


class NumericalError(IQModelError, ArithmeticError):
    """A computed quantity violated an invariant beyond rounding tolerance."""


class StateCountOverflow(NumericalError, OverflowError):
    """An exact count does not fit the platform's index range."""


class DimensionMismatch(IQModelError, ValueError):
    pass


class NoConvergence(IQModelError):
    """The stationary solver hit its iteration cap without meeting the residual bound."""


class EvaluationCapExceeded(IQModelError):
    pass


class ConfigError(IQModelError):
    """A configuration document failed to parse or validate.

    ``field`` names the offending entry (e.g. ``types[1].rho``) and
    ``line`` is set for JSON syntax errors.
    """

    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(field)
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class NonUniqueWarning(UserWarning):
    """The chain admits more than one stationary distribution."""


class FlowRatioUndefined(UserWarning):
    """A type has zero expected queue length so its flow ratio is undefined."""


class ConvexityViolation(UserWarning):
    """The cost surface has a local minimum that is not global."""
