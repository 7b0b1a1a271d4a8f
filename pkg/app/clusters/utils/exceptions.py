"""
This module contains the exceptions for the clusters app.
"""

from core.utils.exceptions import CheckFailedException, ResourceCapException, UsageException


class CliqueCapExceeded(ResourceCapException):
    """Custom exception for clique enumerations passing the configured cap"""
    pass


class RigidityException(UsageException):
    """Custom exception for objects that are not m-rigid or have the wrong size"""
    pass


class DomainMembershipException(UsageException):
    """Custom exception for objects outside the fundamental domain"""
    pass


class NormalizationException(ResourceCapException):
    """Custom exception for objects with no normalizing slice inside the window"""
    pass


class ProjectionException(ResourceCapException):
    """Custom exception for fingerprint systems without a non-negative solution in the window"""
    pass


class PerpendicularException(CheckFailedException):
    """Custom exception for perpendicular categories with the wrong shape"""
    pass


class LocalisationException(CheckFailedException):
    """Custom exception for localised objects failing their postconditions"""
    pass


class EndoAlgebraException(CheckFailedException):
    """Custom exception for inconsistent endomorphism algebra data"""
    pass
