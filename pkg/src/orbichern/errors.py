"""Exception types shared across the package."""


class OrbichernError(Exception):
    """Base class for all package errors."""


class GeometryMismatch(OrbichernError):
    """Operands live over different geometries."""


class NonUnitError(OrbichernError):
    """Inversion of a class whose constant term is zero."""


class DomainError(OrbichernError):
    """An operation was called outside its stated domain."""


class PairFormatError(OrbichernError):
    """A pair description file is malformed."""
