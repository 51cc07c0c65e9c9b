"""Exception types raised by the package."""


class CoherenceError(Exception):
    """Base class for all package-specific errors."""


class NonHermitianInput(CoherenceError):
    """Matrix violates the Hermiticity tolerance."""


class ConvergenceFailure(CoherenceError):
    """Iterative eigensolver exceeded its sweep cap."""


class DimensionMismatch(CoherenceError):
    """Operands have incompatible dimensions."""


class InvalidEpsilon(CoherenceError):
    """Mixing parameter outside [0, 1]."""


class NonUnitVector(CoherenceError):
    """Vector is not normalized within tolerance."""


class BlochNormExceeded(CoherenceError):
    """Bloch vector longer than 1."""


class InvalidRank(CoherenceError):
    """Requested rank outside [1, d]."""


class NonPrimeDimension(CoherenceError):
    """Complete MUB construction requested for a non-prime dimension."""


class MalformedDistribution(CoherenceError):
    """Probability rows are negative or do not sum to 1."""


class InconsistentStatistics(CoherenceError):
    """Measurement statistics do not correspond to any physical state."""


class InvalidSpectrum(CoherenceError):
    """Eigenvalue list is negative or not normalized."""


class InvalidDimension(CoherenceError):
    """Dimension outside the supported range."""


class NotQubit(CoherenceError):
    """Operation defined for two-level systems only."""


class NotApplicable(CoherenceError):
    """Relation does not apply to the given state or context."""


class TooFewSamples(CoherenceError):
    """Monte Carlo sample count below the minimum."""
