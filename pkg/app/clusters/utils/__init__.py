"""
This module contains the constants, exceptions and validators for the clusters app.
"""

from .exceptions import (
    CliqueCapExceeded,
    RigidityException,
    DomainMembershipException,
    NormalizationException,
    ProjectionException,
    PerpendicularException,
    LocalisationException,
    EndoAlgebraException
)

from .validators import (
    MRigidObjectValidator
)

from .constants import (
    VERIFICATION_SUITES,
    G_TWIST_RANGE,
    CHECK_STATUS,
    ERROR_MESSAGES,
    LOGGING_CONFIG
)

__all__ = [
    'CliqueCapExceeded',
    'RigidityException',
    'DomainMembershipException',
    'NormalizationException',
    'ProjectionException',
    'PerpendicularException',
    'LocalisationException',
    'EndoAlgebraException',
    'MRigidObjectValidator',
    'VERIFICATION_SUITES',
    'G_TWIST_RANGE',
    'CHECK_STATUS',
    'ERROR_MESSAGES',
    'LOGGING_CONFIG'
]
