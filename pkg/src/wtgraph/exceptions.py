class ThresholdGraphError(ValueError):
    """Base class for domain errors raised by this package."""


class NotInAlgebra(ThresholdGraphError):
    """The matrix is not the Laplacian of any weighted threshold graph."""


class NotRealizable(ThresholdGraphError):
    """No weight vector over the given alphabet has the requested spectrum."""


class NormalizationUndefined(ThresholdGraphError):
    """An alphabet with a single value cannot be mapped onto [-1, 1]."""


class SizeLimitError(ThresholdGraphError):
    pass


class ConvergenceError(RuntimeError):
    pass
