"""
Cache of the per-(quiver, m, window) computation context: the knitted AR
quiver, the derived model and the mesh category built on it.
"""

from typing import Any, Dict, Optional, Tuple, Type, TypeVar
import logging
import threading

from derived.domain import Window
from derived.services import DerivedModel, MeshCategory
from quivers.domain import ARQuiver, Quiver
from quivers.services import KnittingService

from ..utils.constants import CLUSTER_CONFIG

logger = logging.getLogger(__name__)

S = TypeVar('S')


class ClusterContext:
    """Everything the cluster services need for one quiver, m and window"""

    def __init__(self, quiver: Quiver, m: int, window: Window, ar: Optional[ARQuiver] = None):
        self.quiver = quiver
        self.m = m
        self.window = window
        self.ar = ar if ar is not None else KnittingService().knit_module_category(quiver)
        self.model = DerivedModel(self.ar, m, window)
        self.mesh = MeshCategory(self.model)
        self._services: Dict[type, Any] = {}
        self._lock = threading.RLock()

    @property
    def n(self) -> int:
        return self.quiver.n

    def service(self, service_class: Type[S]) -> S:
        """One shared instance of service_class per context"""
        with self._lock:
            if service_class not in self._services:
                self._services[service_class] = service_class(self)
            return self._services[service_class]

    def __repr__(self) -> str:
        return f"ClusterContext({self.quiver.label}, m={self.m}, window=[{self.window.low}, {self.window.high}])"


class ContextService:
    _contexts: Dict[Tuple[Quiver, int, Window], ClusterContext] = {}
    _knitted: Dict[Quiver, ARQuiver] = {}
    _lock = threading.Lock()

    def __init__(self):
        self.logger = logger

    @staticmethod
    def default_window(m: int) -> Window:
        return Window(CLUSTER_CONFIG['WINDOW_LOW'], m + CLUSTER_CONFIG['WINDOW_PAD'])

    def get_context(self, quiver: Quiver, m: int, window: Optional[Window] = None) -> ClusterContext:
        """
        Return the cached context, building it on first use
        Args:
            quiver: Dynkin quiver, possibly disconnected or empty
            m: The m of C_m(H)
            window: Shift window, the configured default when omitted
        Returns:
            ClusterContext shared by every caller with the same key
        """
        window = window or self.default_window(m)
        key = (quiver, m, window)
        with self._lock:
            context = self._contexts.get(key)
            if context is None:
                ar = self._knitted.get(quiver)
                context = ClusterContext(quiver, m, window, ar=ar)
                self._knitted[quiver] = context.ar
                self._contexts[key] = context
                self.logger.debug(f"Built {context!r}")
        return context

    @classmethod
    def clear(cls):
        with cls._lock:
            cls._contexts.clear()
            cls._knitted.clear()
