"""
Bounded worker pool for the verification sweeps.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar
import logging

from ..utils.constants import CLUSTER_CONFIG

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


class WorkerPoolService:
    def __init__(self, workers: int = None):
        self.logger = logger
        self.workers = max(1, workers or CLUSTER_CONFIG['WORKERS'])

    def map(self, function: Callable[[T], R], items: Iterable[T]) -> List[R]:
        """Apply function to every item, results in input order"""
        items = list(items)
        if self.workers == 1 or len(items) < 2:
            return [function(item) for item in items]
        self.logger.debug(f"Dispatching {len(items)} work items to {self.workers} workers")
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            return list(executor.map(function, items))
