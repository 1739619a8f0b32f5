"""Domain errors raised by the library.

The CLI serializes these by class name, so the names are part of the
output contract.
"""


class DomainError(Exception):
    """Base class for all expected mathematical/input failures."""


class AsymmetricMatrix(DomainError):
    pass


class NotNegativeDefinite(DomainError):
    pass


class InvalidModel(DomainError):
    pass


class BadParameters(DomainError):
    pass


class NotIntegral(DomainError):
    pass


class NonEffectiveGamma(DomainError):
    pass


class KPlusDeltaNotQCartier(DomainError):
    pass


class WildPrime(DomainError):
    pass


class Unstabilized(DomainError):
    pass


class ModelFileError(DomainError):
    pass
