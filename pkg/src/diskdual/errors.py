"""Exception types shared across the toolkit."""


class NumericsError(ValueError):
    """Base class for numerical-validity failures (CLI exit code 3)."""


class InvalidGridError(NumericsError):
    """Sample grid is unusable (odd length, too few nodes, ...)."""


class InvalidDataError(NumericsError):
    """Non-finite values entered a numerical container or node set."""


class AliasingError(NumericsError):
    """Requested grid is too coarse for the stored frequency support."""


class BoundaryProximityError(NumericsError):
    """Evaluation point too close to the curve for the advertised accuracy."""


class EvaluationDomainError(NumericsError):
    """Series evaluated on the wrong side of the boundary."""


class TruncationError(NumericsError):
    """Stored truncation is too short for the requested operation."""


class InvalidFamilyError(NumericsError):
    """Coefficient family violates the decay class an operation requires."""


class DegenerateInputError(NumericsError):
    """Identically zero input where a nontrivial one is required."""
