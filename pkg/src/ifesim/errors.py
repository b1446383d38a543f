"""Exception types shared across the package."""


class DimensionMismatchError(ValueError):
    """Operands live on different spaces (or a matrix is not square)."""


class NotHermitianError(ValueError):
    """A matrix required to be Hermitian exceeds the hermiticity tolerance."""


class NoConvergenceError(RuntimeError):
    """The eigensolver failed to converge."""


class IndexOutOfRangeError(IndexError):
    """A sample index lies outside the trace."""


class EvaluationError(RuntimeError):
    """A user-supplied time evaluator raised or returned garbage."""


class LengthMismatchError(ValueError):
    """Sampled arrays do not match the grid length."""


class InvalidDepthError(ValueError):
    """Requested product depth is not a positive integer."""


class CutoffTooSmallError(ValueError):
    """Fock cutoff leaves no room for the interaction plus its buffer."""


class BadOrderingError(ValueError):
    """Exchange orders passed in the wrong relative order."""


class UnknownModelError(ValueError):
    """Requested model name is not in the catalog."""


class ScenarioParseError(ValueError):
    """Scenario file is malformed or fails validation."""
