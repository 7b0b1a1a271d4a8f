"""
This module contains the knitting service, which builds the
Auslander-Reiten quiver of mod H from the projectives.

Modules are located in ZQ^op by (orbit, level), the module at (i, k)
being tau^{-k} P(i). An arrow i -> j of Q gives the arrows
(j, k) -> (i, k) and (i, k) -> (j, k + 1).
"""

from typing import Dict, List, Tuple
import logging

import networkx as nx

from ..domain import ARQuiver, ARVertex, DimVector, Mesh, Quiver
from ..utils.constants import ERROR_MESSAGES, LOGGING_CONFIG
from ..utils.exceptions import KnittingException
from .quiver_service import QuiverService

logger = logging.getLogger(LOGGING_CONFIG['KNITTING_LOGGER'])

Coordinate = Tuple[str, int]


class KnittingService:
    def __init__(self):
        self.logger = logger
        self.quiver_service = QuiverService()

    def slice_order(self, quiver: Quiver) -> List[str]:
        """Sinks first, ties broken by label"""
        return list(nx.lexicographical_topological_sort(quiver.digraph.reverse(copy=True)))

    def predecessor_coordinates(self, quiver: Quiver, orbit: str, level: int) -> List[Coordinate]:
        """Coordinates with an arrow into (orbit, level) in ZQ^op"""
        return (
            [(j, level) for j in quiver.successors(orbit)]
            + [(i, level - 1) for i in quiver.predecessors(orbit)]
        )

    def knit_module_category(self, quiver: Quiver) -> ARQuiver:
        """
        Knit the AR quiver level by level
        Args:
            quiver: A Dynkin quiver (disjoint unions allowed)
        Returns:
            The ARQuiver with tau, meshes and slice order
        Raises:
            KnittingException: Mesh additivity or a counting invariant fails
        """
        order = self.slice_order(quiver)
        injective_dims = {quiver.injective_dim(i): i for i in quiver.vertices}
        projective_dims = {quiver.projective_dim(i): i for i in quiver.vertices}
        dims: Dict[Coordinate, Tuple[int, ...]] = {}
        vertices: Dict[Coordinate, ARVertex] = {}
        open_orbits = list(order)
        level = 0
        slice_index = 0
        limit = len(self.quiver_service.positive_roots(quiver)) if quiver.n else 0

        while open_orbits:
            if len(vertices) > limit:
                raise KnittingException(
                    ERROR_MESSAGES['ROOT_COUNT'].format(knitted=len(vertices), roots=limit)
                )
            still_open = []
            for orbit in order:
                if orbit not in open_orbits:
                    continue
                if level == 0:
                    values = quiver.projective_dim(orbit).values
                else:
                    values = self._knit_dimension(quiver, dims, orbit, level)
                if any(value < 0 for value in values) or not any(values):
                    raise KnittingException(
                        ERROR_MESSAGES['MESH_ADDITIVITY'].format(vertex=(orbit, level), dim=values)
                    )
                dim = DimVector(quiver.vertices, values)
                vertex = ARVertex(
                    dim=dim,
                    orbit=orbit,
                    level=level,
                    slice_index=slice_index,
                    projective_of=projective_dims.get(dim),
                    injective_of=injective_dims.get(dim),
                )
                slice_index += 1
                dims[(orbit, level)] = values
                vertices[(orbit, level)] = vertex
                if vertex.injective_of is None:
                    still_open.append(orbit)
            open_orbits = still_open
            level += 1

        ar = self._assemble(quiver, vertices)
        self._check(quiver, ar)
        self.logger.info(f"Knitted {len(ar)} indecomposables for {quiver.label}")
        return ar

    def _knit_dimension(self, quiver: Quiver, dims: Dict[Coordinate, Tuple[int, ...]],
                        orbit: str, level: int) -> Tuple[int, ...]:
        """dim tau^{-1}X = sum of the existing middles - dim X"""
        total = [-value for value in dims[(orbit, level - 1)]]
        for coordinate in self.predecessor_coordinates(quiver, orbit, level):
            if coordinate in dims:
                total = [a + b for a, b in zip(total, dims[coordinate])]
        return tuple(total)

    def _assemble(self, quiver: Quiver, vertices: Dict[Coordinate, ARVertex]) -> ARQuiver:
        arrows = []
        meshes = []
        for (orbit, level), vertex in vertices.items():
            middles = []
            for coordinate in self.predecessor_coordinates(quiver, orbit, level):
                if coordinate in vertices:
                    arrows.append((vertices[coordinate], vertex))
                    middles.append(vertices[coordinate])
            if level > 0:
                middles.sort(key=lambda v: v.slice_index)
                meshes.append(Mesh(start=vertices[(orbit, level - 1)], middles=tuple(middles), end=vertex))
        return ARQuiver(quiver, vertices.values(), arrows, meshes)

    def _check(self, quiver: Quiver, ar: ARQuiver):
        """Mesh additivity and the counting invariants"""
        for mesh in ar.meshes:
            middle_total = [sum(values) for values in zip(*(v.dim.values for v in mesh.middles))] \
                or [0] * quiver.n
            ends = [a + b for a, b in zip(mesh.start.dim.values, mesh.end.dim.values)]
            if ends != middle_total:
                raise KnittingException(
                    ERROR_MESSAGES['MESH_ADDITIVITY'].format(vertex=mesh.end.name, dim=ends)
                )
        roots = self.quiver_service.positive_roots(quiver) if quiver.n else []
        if sorted(str(v.dim) for v in ar.vertices) != sorted(str(root) for root in roots):
            raise KnittingException(
                ERROR_MESSAGES['ROOT_COUNT'].format(knitted=len(ar), roots=len(roots))
            )
        if len(ar.projectives) != quiver.n or len(ar.injectives) != quiver.n:
            raise KnittingException(
                ERROR_MESSAGES['BOUNDARY_COUNT'].format(
                    projectives=len(ar.projectives), injectives=len(ar.injectives), n=quiver.n
                )
            )
        for source, target in ar.arrows:
            if source.slice_index >= target.slice_index:
                raise KnittingException(
                    ERROR_MESSAGES['MESH_ADDITIVITY'].format(vertex=target.name, dim='slice order')
                )
