"""
This module contains the exceptions for the quivers app.
"""

from core.utils.exceptions import CheckFailedException, UsageException


class QuiverFormatException(UsageException):
    """Custom exception for malformed quiver descriptions"""
    pass


class CyclicQuiverException(UsageException):
    """Custom exception for quivers with an oriented cycle"""
    pass


class DisconnectedQuiverException(UsageException):
    """Custom exception for quivers whose underlying graph is disconnected"""
    pass


class NonDynkinQuiverException(UsageException):
    """Custom exception for quivers whose underlying graph is not of type A, D or E"""
    pass


class MultipleArrowsException(UsageException):
    """Custom exception for repeated arrows between the same ordered pair"""
    pass


class DimensionMismatchException(UsageException):
    """Custom exception for dimension vectors indexed by the wrong vertex set"""
    pass


class UnknownVertexException(UsageException):
    """Custom exception for AR vertices that do not belong to the AR quiver"""
    pass


class KnittingException(CheckFailedException):
    """Custom exception for inconsistencies found while knitting"""
    pass
