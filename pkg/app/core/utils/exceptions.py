"""
This module contains the base exceptions shared by every mcluster app.
"""


class MClusterException(Exception):
    """Base exception for all mcluster computations"""
    pass


class CheckFailedException(MClusterException):
    """Raised when an internal consistency check fails"""
    pass


class ResourceCapException(MClusterException):
    """Raised when a configured resource cap is reached"""
    pass


class UsageException(MClusterException):
    """Raised for invalid user input or command options"""
    pass


class WindowOverflowException(ResourceCapException):
    """Custom exception for objects falling outside the shift window"""
    pass


class OptionsValidationException(UsageException):
    """Custom exception for invalid command options"""
    pass
