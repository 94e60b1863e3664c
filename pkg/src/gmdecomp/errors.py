"""Exception hierarchy for gmdecomp.

All library errors derive from :class:`GmdError` so callers can catch one
base class. Validation problems (bad shapes, non-PSD constraints, bad data)
and numerical failures are kept distinct because the CLI maps them to
different exit codes.
"""


class GmdError(Exception):
    """Base class for all gmdecomp errors."""


class ValidationError(GmdError):
    """Input data or constraints failed validation."""


class NumericalError(GmdError):
    """A numerical routine failed (non-convergence, bad spectrum)."""


class NonSquareError(ValidationError):
    pass


class NotSymmetricError(ValidationError):
    pass


class NotPSDError(ValidationError):
    pass


class DimensionMismatchError(ValidationError):
    pass


class EmptyMatrixError(ValidationError):
    pass


class NonFiniteError(ValidationError):
    pass


class UnsupportedError(ValidationError):
    pass


class ZeroVarianceColumnError(ValidationError):
    pass


class NotADistanceMatrixError(ValidationError):
    pass


class NonPositiveWeightError(ValidationError):
    pass


class EmptyMarginError(ValidationError):
    pass


class NegativeCountError(ValidationError):
    pass


class SingleLevelVariableError(ValidationError):
    pass


class ParseError(ValidationError):
    pass


class RaggedRowsError(ParseError):
    pass


class NoConvergenceError(NumericalError):
    pass


class ComplexOrNegativeEigenvalueError(NumericalError):
    """Raised when an active tolerance finds eigen/singular values that are
    not real and positive (e.g. decomposing a non-PSD matrix without
    disabling the tolerance)."""


class ComplexOrNegativeSingularValueError(ComplexOrNegativeEigenvalueError):
    pass
