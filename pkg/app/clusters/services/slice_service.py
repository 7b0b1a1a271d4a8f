"""
This module contains the slice service, which moves a maximal m-rigid
object of D_G into mod H0 v ... v (mod H0)[m-1] for a hereditary H0
derived equivalent to H.

A slice is p: Q_0 -> Z with p(j) - p(i) in {0, 1} for every arrow i -> j.
Its vertices (o, p(o)) of ZQ^op are the projectives of H0, whose arrows
are i -> j when p(i) = p(j) and j -> i when p(j) = p(i) + 1. The
coordinate (o, q) over H is (o, q - p(o)) over H0.
"""

from collections import deque
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple
import logging

import networkx as nx

from core.services.context_service import ClusterContext, ContextService
from derived.domain import DVertex
from quivers.domain import Quiver
from quivers.services import QuiverService

from ..domain import MRigidObject, NormalizedObject
from ..utils.constants import ERROR_MESSAGES
from ..utils.exceptions import NormalizationException

logger = logging.getLogger(__name__)

Slice = Dict[str, int]


class SliceService:
    def __init__(self, context: ClusterContext):
        self.logger = logger
        self.context = context
        self.quiver = context.quiver
        self.model = context.model
        self.m = context.m
        self.context_service = ContextService()
        self.quiver_service = QuiverService()
        self._quivers: Dict[Tuple[Tuple[str, str], ...], Quiver] = {}

    def _tree_edges(self) -> List[Tuple[str, str, int]]:
        """
        Edges of a spanning forest as (parent, child, direction), direction
        +1 when the arrow runs parent -> child
        """
        edges = []
        undirected = self.quiver.digraph.to_undirected(as_view=True)
        seen = set()
        for root in self.quiver.vertices:
            if root in seen:
                continue
            seen.add(root)
            queue = deque([root])
            while queue:
                parent = queue.popleft()
                for child in sorted(undirected.neighbors(parent)):
                    if child in seen:
                        continue
                    seen.add(child)
                    queue.append(child)
                    direction = 1 if self.quiver.digraph.has_edge(parent, child) else -1
                    edges.append((parent, child, direction))
        return edges

    def slices(self, reach: int) -> Iterator[Slice]:
        """
        Slices with p(root) in [-reach, reach] on every component, the
        identity slice first
        """
        edges = self._tree_edges()
        roots = [v for v in self.quiver.vertices if not any(child == v for _, child, _ in edges)]
        heights = sorted(range(-reach, reach + 1), key=lambda r: (abs(r), r))
        for root_heights in product(heights, repeat=len(roots)):
            for steps in product((0, 1), repeat=len(edges)):
                heights_by_vertex = dict(zip(roots, root_heights))
                for (parent, child, direction), step in zip(edges, steps):
                    heights_by_vertex[child] = heights_by_vertex[parent] + direction * step
                yield heights_by_vertex

    def slice_quiver(self, heights: Slice) -> Quiver:
        arrows = []
        for source, target in self.quiver.arrows:
            if heights[target] == heights[source]:
                arrows.append((source, target))
            else:
                arrows.append((target, source))
        key = tuple(arrows)
        if key not in self._quivers:
            self._quivers[key] = self.quiver_service.build_quiver(
                self.quiver.vertices, arrows, name=f"{self.quiver.label}/slice", require_connected=False
            )
        return self._quivers[key]

    def reposition(self, vertex: DVertex, heights: Slice, target: ClusterContext) -> DVertex:
        """The representative of vertex over H0 in the fundamental domain of C_m(H0)"""
        orbit, level = self.model.coordinate(vertex)
        moved = target.model.from_coordinate(orbit, level - heights[orbit])
        return target.model.to_fundamental_domain(moved)

    def _reach(self) -> int:
        """Levels covered by one G-period of ZQ^op, with room on both sides"""
        levels = max((self.context.ar.last_level(o) for o in self.quiver.vertices), default=0) + 1
        return (self.m + 1) * (levels + self.quiver.n)

    def normalize_to_Dminus(self, t: MRigidObject) -> NormalizedObject:
        """
        Find a slice putting every summand of t into degrees 0..m-1
        Args:
            t: A maximal m-rigid object of C_m(H) named in D_G
        Returns:
            NormalizedObject with the slice, H0 and the repositioned object
        Raises:
            NormalizationException: No slice of the search range works
        """
        if all(self.model.in_fundamental_domain_minus(v) for v in t.summands):
            identity = {v: 0 for v in self.quiver.vertices}
            return NormalizedObject(
                original=t, slice_heights=identity, quiver=self.quiver, object=t,
                positions={v: v for v in t.summands},
            )
        tried = 0
        for heights in self.slices(self._reach()):
            tried += 1
            found = self._try_slice(t, heights)
            if found is not None:
                self.logger.debug(f"Normalized {t} after {tried} slices into {found.quiver.label}")
                return found
        self.logger.error(f"No slice normalizes {t} among {tried} candidates")
        raise NormalizationException(ERROR_MESSAGES['NO_SLICE'].format(object=str(t), top=self.m - 1))

    def _try_slice(self, t: MRigidObject, heights: Slice) -> Optional[NormalizedObject]:
        quiver = self.slice_quiver(heights)
        target = self.context_service.get_context(quiver, self.m, self.context.window)
        positions = {}
        for vertex in t.summands:
            moved = self.reposition(vertex, heights, target)
            if not target.model.in_fundamental_domain_minus(moved):
                return None
            positions[vertex] = moved
        return NormalizedObject(
            original=t,
            slice_heights=dict(heights),
            quiver=target.quiver,
            object=MRigidObject.from_vertices(positions.values(), maximal=t.maximal),
            positions=positions,
        )
