from .quiver_service import QuiverService
from .knitting_service import KnittingService
from .hammock_service import HammockService

__all__ = [
    'QuiverService',
    'KnittingService',
    'HammockService',
]
