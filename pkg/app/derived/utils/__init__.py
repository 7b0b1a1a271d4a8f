"""
This module contains the constants, exceptions, and validators for the derived app.
"""

from .exceptions import (
    WindowOverflowException,
    OrbitWindowException,
    CoordinateException,
    HomBasisException,
    ApproximationException,
    EndpointMismatchException,
    ObjectNameException
)

from .validators import (
    ObjectNameValidator
)

from .constants import (
    ORBIT_RANGE,
    MAX_COORDINATE_STEPS,
    OBJECT_NAME_PATTERN,
    ERROR_MESSAGES,
    LOGGING_CONFIG
)

__all__ = [
    'WindowOverflowException',
    'OrbitWindowException',
    'CoordinateException',
    'HomBasisException',
    'ApproximationException',
    'EndpointMismatchException',
    'ObjectNameException',
    'ObjectNameValidator',
    'ORBIT_RANGE',
    'MAX_COORDINATE_STEPS',
    'OBJECT_NAME_PATTERN',
    'ERROR_MESSAGES',
    'LOGGING_CONFIG'
]
