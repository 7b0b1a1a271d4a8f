from .context_service import ClusterContext, ContextService
from .worker_service import WorkerPoolService

__all__ = ['ClusterContext', 'ContextService', 'WorkerPoolService']
