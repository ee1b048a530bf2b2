"""Exception hierarchy shared by all modules."""


class CovresError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgument(CovresError, ValueError):
    pass


class InvalidFamilyParameter(InvalidArgument):
    pass


class DomainViolation(InvalidArgument):
    """A graph breaks a standing hypothesis (e.g. it has an isolated vertex)."""


class EmptyCoverIdeal(DomainViolation):
    pass


class ZeroIdeal(DomainViolation):
    pass


class NotAFace(InvalidArgument):
    pass


class UndefinedFH(InvalidArgument):
    pass


class ResourceLimit(CovresError, RuntimeError):
    """A configured size cap would be exceeded."""
