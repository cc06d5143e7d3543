"""Exception types shared across the library."""


class JacobsthalError(Exception):
    """Base class for all library-specific errors."""


class NotPrime(JacobsthalError, ValueError):
    """A value required to be prime is not."""


class NotASquare(JacobsthalError):
    """Square root requested of a quadratic nonresidue."""


class ThresholdExceeded(JacobsthalError):
    """An input is above a configured size cap."""


class ParityViolation(JacobsthalError):
    """A raw character sum that must be even is odd."""


class DivisibilityViolation(JacobsthalError):
    """A raw character sum fails its required divisibility by 4."""


class WrongResidueClass(JacobsthalError):
    """The prime is outside the congruence class the operation needs."""


class NotANonresidue(JacobsthalError):
    """The parameter n must be a quadratic nonresidue mod p."""


class NIsACube(JacobsthalError):
    """The parameter n must not be a cube mod p."""


class NoRepresentation(JacobsthalError):
    """The prime is not represented by the requested quadratic form."""


class BadReduction(JacobsthalError):
    """The curve model is singular over the field in question."""


class HasseViolation(JacobsthalError):
    """A Frobenius trace exceeds the Hasse bound."""


class InconsistentCounts(JacobsthalError):
    """Point counts do not come from a valid Frobenius polynomial."""
