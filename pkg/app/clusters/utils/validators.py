"""
This module contains the validators for the clusters app.
"""

from itertools import combinations
from typing import Iterable, List, Optional

from derived.domain import DVertex

from ..domain import CompatibilityGraph
from .constants import ERROR_MESSAGES
from .exceptions import DomainMembershipException, RigidityException


class MRigidObjectValidator:
    def __init__(self, graph: CompatibilityGraph):
        self.graph = graph

    def validate(self, vertices: Iterable[DVertex], size: Optional[int] = None) -> List[DVertex]:
        """
        Validate a candidate m-rigid object
        Args:
            vertices: Summands, named by their fundamental domain representatives
            size: Required number of summands, if any
        Returns:
            The distinct summands in fundamental domain order
        Raises:
            DomainMembershipException: A summand outside the fundamental domain
            RigidityException: Repeated summands, wrong size, or a non-vanishing Ext^k_C
        """
        vertices = list(vertices)
        for vertex in vertices:
            if vertex not in self.graph.domain:
                raise DomainMembershipException(
                    ERROR_MESSAGES['NOT_IN_DOMAIN'].format(vertex=vertex.name, m=self.graph.m)
                )
        label = '{' + ', '.join(v.name for v in vertices) + '}'
        if len(set(vertices)) != len(vertices):
            raise RigidityException(
                ERROR_MESSAGES['NOT_RIGID'].format(object=label, detail='repeated summand')
            )
        if size is not None and len(vertices) != size:
            raise RigidityException(ERROR_MESSAGES['WRONG_SIZE'].format(expected=size, size=len(vertices)))
        for vertex in vertices:
            if not self.graph.self_rigid[vertex]:
                raise RigidityException(ERROR_MESSAGES['NOT_RIGID'].format(
                    object=label, detail=f"{vertex.name} has self-extensions"
                ))
        for x, y in combinations(vertices, 2):
            if not self.graph.adjacent(x, y):
                raise RigidityException(ERROR_MESSAGES['NOT_RIGID'].format(
                    object=label, detail=f"Ext between {x.name} and {y.name}"
                ))
        return sorted(vertices, key=self.graph.domain.index)
