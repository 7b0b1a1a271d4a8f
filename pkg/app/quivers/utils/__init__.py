"""
This module contains the constants, exceptions, and validators for the quivers app.
"""

from .exceptions import (
    QuiverFormatException,
    CyclicQuiverException,
    DisconnectedQuiverException,
    NonDynkinQuiverException,
    MultipleArrowsException,
    DimensionMismatchException,
    UnknownVertexException,
    KnittingException
)

from .validators import (
    QuiverValidator
)

from .constants import (
    QUIVER_PRESETS,
    COXETER_NUMBERS,
    EXCEPTIONAL_ARMS,
    QUIVER_SCHEMA_KEYS,
    ERROR_MESSAGES,
    LOGGING_CONFIG
)

__all__ = [
    'QuiverFormatException',
    'CyclicQuiverException',
    'DisconnectedQuiverException',
    'NonDynkinQuiverException',
    'MultipleArrowsException',
    'DimensionMismatchException',
    'UnknownVertexException',
    'KnittingException',
    'QuiverValidator',
    'QUIVER_PRESETS',
    'COXETER_NUMBERS',
    'EXCEPTIONAL_ARMS',
    'QUIVER_SCHEMA_KEYS',
    'ERROR_MESSAGES',
    'LOGGING_CONFIG'
]
