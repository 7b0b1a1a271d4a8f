"""
This module contains the exceptions for the derived app.
"""

from core.utils.exceptions import CheckFailedException, UsageException, WindowOverflowException


class OrbitWindowException(CheckFailedException):
    """Custom exception for nonvanishing orbit-sum terms outside t in {-1, 0, 1}"""
    pass


class CoordinateException(CheckFailedException):
    """Custom exception for inconsistencies of the ZQ^op coordinates"""
    pass


class HomBasisException(CheckFailedException):
    """Custom exception for mesh-category bases disagreeing with hammock dimensions"""
    pass


class ApproximationException(CheckFailedException):
    """Custom exception for approximations failing their defining property"""
    pass


class EndpointMismatchException(UsageException):
    """Custom exception for composing maps whose endpoints do not match"""
    pass


class ObjectNameException(UsageException):
    """Custom exception for unreadable object names"""
    pass
