"""Exception hierarchy.

Every error raised for a violated precondition derives from
:class:`DomainError`, which the CLI maps to exit status 1.
"""


class DomainError(ValueError):
    """An input lies outside the domain of the requested operation."""


class PadTooSmall(DomainError):
    pass


class InvalidCharacteristic(DomainError):
    pass


class SizeCapExceeded(DomainError):
    pass


class SeriesCapExceeded(SizeCapExceeded):
    pass


class SizeMismatch(DomainError):
    pass


class NotVirtualCharacter(DomainError):
    pass


class NotStrictlyIncreasing(DomainError):
    pass


class ZeroDegree(DomainError):
    pass


class ParamOutOfTheoremRange(DomainError):
    pass


class LowDegreeRegime(DomainError):
    pass


class InvalidParams(DomainError):
    pass
