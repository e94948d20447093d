"""Exception types raised across the package."""


class ModCohomotopyError(Exception):
    """Base class for all package errors."""


class ParseError(ModCohomotopyError):
    """Malformed facet list, space expression, or coefficient string."""


class NotConnected(ModCohomotopyError):
    """Complexes are required to be connected."""


class DegreeOutOfRange(ModCohomotopyError):
    """Degree outside the range supported by the complex or convention."""


class CompositionNonzero(ModCohomotopyError):
    """d_out . d_in is not zero over the requested coefficients."""


class RelationViolation(ModCohomotopyError):
    """A homomorphism matrix does not respect the source relations."""


class MixedComplexes(ModCohomotopyError):
    """Cochain operation applied to cochains on different complexes."""


class BadIndex(ModCohomotopyError):
    """Invalid cup-i index."""


class WrongCoefficients(ModCohomotopyError):
    """Operation applied to a class with unsupported coefficients."""


class IncompatibleCoefficients(ModCohomotopyError):
    """Coefficient map incompatible with the coefficients of the class."""


class LiftFailure(ModCohomotopyError):
    """Internal error: a cocycle failed to lift (signals a bug)."""


class UnsupportedOperation(ModCohomotopyError):
    """Requested operation has no rule (e.g. odd-prime P^1 on cochains)."""


class TooLarge(ModCohomotopyError):
    """Extension enumeration beyond the desk-scale guard."""


class RangeTooLarge(ModCohomotopyError):
    """Catalog scan range beyond the allowed bounds."""


class HypothesisFailure(ModCohomotopyError):
    """A theorem hypothesis fails, so the requested conclusion is refused."""
