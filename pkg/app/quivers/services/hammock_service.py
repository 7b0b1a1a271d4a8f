"""
This module contains the hammock service: dimensions of Hom and Ext^1
between indecomposable H-modules, read off the knitted AR quiver.
"""

from typing import Dict
import logging
import threading

from ..domain import ARQuiver, ARVertex
from ..utils.constants import ERROR_MESSAGES
from ..utils.exceptions import UnknownVertexException

logger = logging.getLogger(__name__)


class HammockService:
    """
    Hom(X, -) is additive on every mesh not ending at X:
    f(Z) = sum_{W -> Z} f(W) - f(tau Z) + delta_{Z, X},
    evaluated in slice order with f = 0 before the slice of X.
    """

    def __init__(self, ar: ARQuiver):
        self.logger = logger
        self.ar = ar
        self._tables: Dict[ARVertex, Dict[ARVertex, int]] = {}
        self._lock = threading.Lock()

    def _table(self, source: ARVertex) -> Dict[ARVertex, int]:
        table = self._tables.get(source)
        if table is None:
            with self._lock:
                table = self._tables.get(source)
                if table is None:
                    table = self._build_table(source)
                    self._tables[source] = table
        return table

    def _build_table(self, source: ARVertex) -> Dict[ARVertex, int]:
        if source not in self.ar:
            raise UnknownVertexException(
                ERROR_MESSAGES['UNKNOWN_AR_VERTEX'].format(vertex=source.name)
            )
        table = {}
        for vertex in self.ar.vertices:
            if vertex.slice_index < source.slice_index:
                table[vertex] = 0
                continue
            value = sum(table[w] for w in self.ar.predecessors(vertex))
            tau = self.ar.tau_module(vertex)
            if tau is not None:
                value -= table[tau]
            if vertex == source:
                value += 1
            table[vertex] = value
        return table

    def hom(self, x: ARVertex, y: ARVertex) -> int:
        return self._table(x)[y]

    def ext(self, x: ARVertex, y: ARVertex) -> int:
        """dim Ext^1(X, Y) = dim Hom(Y, tau X), zero for projective X"""
        tau = self.ar.tau_module(x)
        if tau is None:
            return 0
        return self.hom(y, tau)
