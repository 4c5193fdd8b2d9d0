"""Exception types raised by orthocorr."""


class OrthoCorrError(Exception):
    """Base class for all library errors."""


class ParameterDomainError(OrthoCorrError, ValueError):
    """Family parameters or degree indices outside their valid range."""


class DomainError(OrthoCorrError, ValueError):
    """Argument outside the orthogonality interval."""


class PoleError(OrthoCorrError, ValueError):
    """Gamma function evaluated at a pole in a position where that is fatal."""


class IllPosedSeriesError(OrthoCorrError, ValueError):
    """A lower parameter vanishes before the series terminates."""


class NotTerminatingError(OrthoCorrError, ValueError):
    """A series that should terminate has no non-positive integer upper parameter."""


class TransformInapplicableError(OrthoCorrError, ValueError):
    """A series transformation's preconditions do not hold."""


class IncompleteStencilError(OrthoCorrError, KeyError):
    """A difference-equation stencil references a missing table entry."""

    def __str__(self):
        return Exception.__str__(self)


class ConvergenceError(OrthoCorrError, ArithmeticError):
    """Iterative eigenvalue solver exceeded its iteration cap."""


class InternalConsistencyError(OrthoCorrError, ArithmeticError):
    """Recurrence data violates a property that holds for every valid family."""
