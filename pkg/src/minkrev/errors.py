"""Exception types shared across the geometry and solver modules."""


class MinkrevError(Exception):
    """Base class for all library-specific errors."""


class NotInvertible(MinkrevError):
    """Lorentz number is a zero divisor (a = +-b) and has no inverse."""


class NoPolarForm(MinkrevError):
    """Lightlike Lorentz numbers admit no polar decomposition."""


class InvalidGrid(MinkrevError):
    """Grid is too short, not strictly increasing, or not uniform."""


class MixedCausalCharacter(MinkrevError):
    """Tangent causal character changes sign or degenerates along a curve."""


class DomainViolation(MinkrevError):
    """A solver radicand left its admissible domain at some node."""

    def __init__(self, message: str, node: int | None = None):
        super().__init__(message)
        self.node = node


class SingularRadicand(DomainViolation):
    """Radicand vanished (within tolerance) instead of going negative."""


class ConstantViolation(MinkrevError):
    """Integration constants violate a solver's admissibility condition."""


class SingularAxis(MinkrevError):
    """Requested parameter range touches the rotation axis."""


class DegenerateMetric(MinkrevError):
    """First fundamental form has zero determinant."""


class LightlikeTangentPlane(MinkrevError):
    """Tangent plane is lightlike; no unit normal exists."""


class NonDiagonalizable(MinkrevError):
    """Shape operator discriminant is negative beyond tolerance."""


class InvalidParameter(MinkrevError):
    """A numeric parameter is outside its admissible range."""


class IncompatiblePair(MinkrevError):
    """(generating plane, rotation axis) is not an admissible combination."""
