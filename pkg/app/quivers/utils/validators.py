"""
This module contains the validators for the quivers app.
"""

from typing import List, Sequence, Tuple

import networkx as nx

from .constants import ERROR_MESSAGES, EXCEPTIONAL_ARMS
from .exceptions import (
    CyclicQuiverException,
    DisconnectedQuiverException,
    MultipleArrowsException,
    NonDynkinQuiverException,
    QuiverFormatException
)


class QuiverValidator:
    def __init__(self, require_connected: bool = True, allow_empty: bool = False):
        self.require_connected = require_connected
        self.allow_empty = allow_empty

    def validate(self, vertices: Sequence[str], arrows: Sequence[Tuple[str, str]]) -> List[str]:
        """
        Validate a quiver description
        Args:
            vertices: Vertex labels
            arrows: (source, target) pairs
        Returns:
            The Dynkin type of every connected component, e.g. ['A3'] or ['A1', 'D4']
        Raises:
            QuiverFormatException: Undeclared or repeated vertices
            MultipleArrowsException: Repeated arrow between the same ordered pair
            CyclicQuiverException: Oriented cycle (loops included)
            DisconnectedQuiverException: Several components while require_connected
            NonDynkinQuiverException: A component that is not of type A, D or E
        """
        self._validate_vertices(vertices)
        self._validate_arrows(vertices, arrows)
        self._validate_acyclic(vertices, arrows)
        graph = nx.Graph()
        graph.add_nodes_from(vertices)
        graph.add_edges_from(arrows)
        components = [graph.subgraph(c).copy() for c in nx.connected_components(graph)]
        if self.require_connected and len(components) > 1:
            raise DisconnectedQuiverException(
                ERROR_MESSAGES['DISCONNECTED'].format(count=len(components))
            )
        return sorted(self._classify(component) for component in components)

    def _validate_vertices(self, vertices: Sequence[str]):
        """Validate labels are declared once"""
        if not vertices and not self.allow_empty:
            raise QuiverFormatException(ERROR_MESSAGES['EMPTY'])
        seen = set()
        for vertex in vertices:
            if vertex in seen:
                raise QuiverFormatException(ERROR_MESSAGES['DUPLICATE_VERTEX'].format(vertex=vertex))
            seen.add(vertex)

    def _validate_arrows(self, vertices: Sequence[str], arrows: Sequence[Tuple[str, str]]):
        """Validate arrow endpoints and multiplicities"""
        declared = set(vertices)
        seen = set()
        for source, target in arrows:
            if source not in declared or target not in declared:
                raise QuiverFormatException(
                    ERROR_MESSAGES['UNKNOWN_VERTEX'].format(arrow=f"{source}->{target}")
                )
            if (source, target) in seen:
                raise MultipleArrowsException(
                    ERROR_MESSAGES['MULTIPLE_ARROWS'].format(source=source, target=target)
                )
            seen.add((source, target))

    def _validate_acyclic(self, vertices: Sequence[str], arrows: Sequence[Tuple[str, str]]):
        """Validate there is no oriented cycle"""
        digraph = nx.DiGraph()
        digraph.add_nodes_from(vertices)
        digraph.add_edges_from(arrows)
        try:
            cycle = nx.find_cycle(digraph)
        except nx.NetworkXNoCycle:
            return
        raise CyclicQuiverException(
            ERROR_MESSAGES['CYCLIC'].format(vertices=' -> '.join(source for source, _ in cycle))
        )

    def _classify(self, graph: nx.Graph) -> str:
        """Dynkin type of a connected underlying graph"""
        n = graph.number_of_nodes()
        if graph.number_of_edges() != n - 1:
            raise NonDynkinQuiverException(
                ERROR_MESSAGES['NON_DYNKIN'].format(reason='underlying graph has a cycle')
            )
        degrees = dict(graph.degree())
        if max(degrees.values(), default=0) > 3:
            raise NonDynkinQuiverException(
                ERROR_MESSAGES['NON_DYNKIN'].format(reason='vertex of valency above 3')
            )
        branch = [vertex for vertex, degree in degrees.items() if degree == 3]
        if not branch:
            return f"A{n}"
        if len(branch) > 1:
            raise NonDynkinQuiverException(
                ERROR_MESSAGES['NON_DYNKIN'].format(reason='more than one branch vertex')
            )
        center = branch[0]
        pruned = graph.copy()
        pruned.remove_node(center)
        arms = tuple(sorted(len(arm) for arm in nx.connected_components(pruned)))
        if arms[0] == 1 and arms[1] == 1:
            return f"D{n}"
        if arms in EXCEPTIONAL_ARMS:
            return EXCEPTIONAL_ARMS[arms]
        raise NonDynkinQuiverException(
            ERROR_MESSAGES['NON_DYNKIN'].format(reason=f"branch arms of lengths {arms}")
        )
