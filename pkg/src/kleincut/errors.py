"""Exception types shared across the package."""


class KleinCutError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatchError(KleinCutError, ValueError):
    """Operands have incompatible dimensions."""


class InvalidPointError(KleinCutError, ValueError):
    """Vector is not a valid point of the upper hyperboloid sheet."""


class TangencyError(KleinCutError, ValueError):
    """Vector is not tangent at the required base point."""


class NumericValidityError(KleinCutError, ValueError):
    """Input is outside the numerically meaningful domain."""


class BoundaryError(KleinCutError, ValueError):
    """Klein coordinate too close to the unit sphere to lift."""


class DegenerateFrameError(KleinCutError, ValueError):
    """Seed directions do not span the tangent space."""


class InstanceConstructionError(KleinCutError, ValueError):
    """Benchmark instance parameters put an anchor outside the feasible ball."""


class OracleContractError(KleinCutError, RuntimeError):
    """Oracle returned a value violating the first-order contract."""


class NumericalBreakdownError(KleinCutError, RuntimeError):
    """Localizer lost positive definiteness.

    Carries the iteration index at which the breakdown was detected and,
    when raised from the solver loop, the partial result so far.
    """

    def __init__(self, message, step=None, partial_result=None):
        super().__init__(message)
        self.step = step
        self.partial_result = partial_result
