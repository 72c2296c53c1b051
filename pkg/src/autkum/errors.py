"""Exception types raised across the package."""


class AutkumError(Exception):
    """Base class for every package-specific error."""


class InvalidPrime(AutkumError):
    """A parameter that must be an odd prime is not one."""


class TooLarge(AutkumError):
    """An enumeration-based routine was asked to exceed its size guard."""


class FieldMismatch(AutkumError):
    """Operands belong to different fields."""


class ZeroInverse(AutkumError):
    """Multiplicative inversion of zero."""


class DivisionByZero(AutkumError):
    """Zero denominator in an exact quotient."""


class NotLaurent(AutkumError):
    """Coefficient extraction on a rational function whose denominator is
    not a power of t."""


class NotOnCurve(AutkumError):
    """A point handed to the group law does not satisfy the curve equation."""


class NotFinite(AutkumError):
    """A counting routine needs a finite base field."""


class InternalError(AutkumError):
    """A guaranteed-by-construction property failed; indicates a bug."""


class ConfigMismatch(AutkumError):
    """A divisor or label does not belong to the given curve configuration."""


class LatticeParityError(AutkumError):
    """A self-intersection number came out odd; the configuration is corrupt."""


class UnsupportedSurface(AutkumError):
    """The requested computation is only defined on the unblown surface."""


class InvalidDivisor(AutkumError):
    """A divisor violates the preconditions of a lattice operation."""


class NoSuchPoint(AutkumError):
    """A named point is absent from the configuration."""


class NotUnique(AutkumError):
    """Zero or several fixed-locus components pass through the point."""


class UnknownGenerator(AutkumError):
    """A word references a generator id with no binding."""


class UnverifiedFibration(AutkumError):
    """An action lookup was attempted without valid fibration certificates."""


class UnknownAction(AutkumError):
    """No table entry matches the verified fibration data."""


class IdentityMap(AutkumError):
    """Fixed-point analysis of the identity transformation."""


class EmptyInput(AutkumError):
    """An operation that needs at least one generator received none."""
