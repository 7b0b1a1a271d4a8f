from .cluster_service import ClusterService
from .slice_service import SliceService
from .localise_service import LocaliseService
from .endo_service import EndoService
from .verification_service import VerificationService

__all__ = ['ClusterService', 'SliceService', 'LocaliseService', 'EndoService', 'VerificationService']
