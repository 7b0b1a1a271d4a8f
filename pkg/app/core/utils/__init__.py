"""
This module contains the constants, exceptions, validators and exact
linear algebra shared by the mcluster apps.
"""

from .exceptions import (
    MClusterException,
    CheckFailedException,
    ResourceCapException,
    UsageException,
    WindowOverflowException,
    OptionsValidationException
)

from .validators import (
    CommandOptionsValidator
)

from .constants import (
    CLUSTER_CONFIG,
    EXIT_CODES,
    ERROR_MESSAGES,
    LOGGING_CONFIG
)

from .linalg import (
    row_reduce,
    rank,
    reduce_vector,
    solve_unitriangular
)

__all__ = [
    'MClusterException',
    'CheckFailedException',
    'ResourceCapException',
    'UsageException',
    'WindowOverflowException',
    'OptionsValidationException',
    'CommandOptionsValidator',
    'CLUSTER_CONFIG',
    'EXIT_CODES',
    'ERROR_MESSAGES',
    'LOGGING_CONFIG',
    'row_reduce',
    'rank',
    'reduce_vector',
    'solve_unitriangular'
]
