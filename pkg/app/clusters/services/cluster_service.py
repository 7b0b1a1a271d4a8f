"""
This module contains the cluster service: the fundamental domain of
C_m(H), Ext in the orbit category, the compatibility graph, maximal
m-rigid objects, complements and tilting modules.
"""

from itertools import combinations
from typing import Iterable, List, Optional, Tuple
import logging
import threading

import networkx as nx

from core.services.context_service import ClusterContext
from core.utils.constants import CLUSTER_CONFIG
from derived.domain import DVertex
from quivers.domain import ARVertex

from ..domain import CompatibilityGraph, FundamentalDomain, MRigidObject, domain_key
from ..utils.constants import ERROR_MESSAGES
from ..utils.exceptions import CliqueCapExceeded, DomainMembershipException
from ..utils.validators import MRigidObjectValidator

logger = logging.getLogger(__name__)


class ClusterService:
    def __init__(self, context: ClusterContext):
        self.logger = logger
        self.context = context
        self.model = context.model
        self.m = context.m
        self._domain: Optional[FundamentalDomain] = None
        self._graph: Optional[CompatibilityGraph] = None
        self._lock = threading.RLock()

    # ========== FUNDAMENTAL DOMAIN ==========

    def fundamental_domain(self) -> FundamentalDomain:
        """mod H v ... v (mod H)[m-1] v H[m], slice-major then shift"""
        if self._domain is not None:
            return self._domain
        with self._lock:
            if self._domain is None:
                self._domain = self._build_domain()
        return self._domain

    def _build_domain(self) -> FundamentalDomain:
        vertices = [
            DVertex(module, shift)
            for module in self.context.ar.vertices
            for shift in range(self.m + 1)
            if shift < self.m or module.is_projective
        ]
        self.model.check(*vertices)
        return FundamentalDomain(self.m, tuple(sorted(vertices, key=domain_key)))

    def ext_cluster(self, x: DVertex, y: DVertex, k: int) -> int:
        """dim Ext^k_C(x, y); k = 0 gives dim Hom_C(x, y)"""
        return self.model.hom_orbit(x, y, k)

    def parse_vertex(self, name: str) -> DVertex:
        vertex = self.model.parse_name(name)
        if vertex not in self.fundamental_domain():
            raise DomainMembershipException(
                ERROR_MESSAGES['NOT_IN_DOMAIN'].format(vertex=vertex.name, m=self.m)
            )
        return vertex

    def parse_object(self, names: Iterable[str]) -> MRigidObject:
        """Read summand names into a validated m-rigid object"""
        vertices = MRigidObjectValidator(self.compatibility_graph()).validate(
            self.parse_vertex(name) for name in names
        )
        return MRigidObject(tuple(vertices), maximal=self.is_maximal(vertices))

    # ========== COMPATIBILITY ==========

    def compatibility_graph(self) -> CompatibilityGraph:
        if self._graph is not None:
            return self._graph
        with self._lock:
            if self._graph is None:
                self._graph = self._build_graph()
        return self._graph

    def _build_graph(self) -> CompatibilityGraph:
        domain = self.fundamental_domain()
        graph = nx.Graph()
        self_rigid = {}
        for index, vertex in enumerate(domain):
            rigid = all(self.ext_cluster(vertex, vertex, k) == 0 for k in range(1, self.m + 1))
            self_rigid[vertex] = rigid
            graph.add_node(vertex, index=index, self_rigid=rigid)
        for x, y in combinations(domain, 2):
            if all(
                self.ext_cluster(x, y, k) == 0 and self.ext_cluster(y, x, k) == 0
                for k in range(1, self.m + 1)
            ):
                graph.add_edge(x, y)
        self.logger.info(
            f"Compatibility graph of {self.context.quiver.label}, m={self.m}: "
            f"{graph.number_of_nodes()} nodes, {graph.number_of_edges()} edges"
        )
        return CompatibilityGraph(self.m, domain, graph, self_rigid)

    def _extends(self, vertex: DVertex, summands: Iterable[DVertex]) -> bool:
        graph = self.compatibility_graph()
        return vertex not in summands and all(graph.adjacent(vertex, s) for s in summands)

    def is_maximal(self, summands: Iterable[DVertex]) -> bool:
        summands = list(summands)
        graph = self.compatibility_graph()
        return not any(graph.self_rigid[v] and self._extends(v, summands) for v in graph.nodes)

    def enumerate_maximal_m_rigid(self, max_cliques: Optional[int] = None) -> List[MRigidObject]:
        """
        All maximal m-rigid objects, as maximal cliques over the self-rigid nodes
        Args:
            max_cliques: Cap on the number of cliques, the configured default when omitted
        Returns:
            Objects sorted by the tuple of their summand indices in the fundamental domain
        Raises:
            CliqueCapExceeded: More maximal cliques than the cap
        """
        cap = max_cliques or CLUSTER_CONFIG['MAX_CLIQUES']
        graph = self.compatibility_graph()
        rigid = [v for v in graph.nodes if graph.self_rigid[v]]
        if not rigid:
            return [MRigidObject((), maximal=True)]
        found = []
        for clique in nx.find_cliques(graph.graph.subgraph(rigid)):
            if len(found) >= cap:
                self.logger.warning(f"Clique enumeration stopped at the cap of {cap}")
                raise CliqueCapExceeded(ERROR_MESSAGES['CLIQUE_CAP'].format(cap=cap))
            found.append(MRigidObject.from_vertices(clique, maximal=True))
        domain = graph.domain
        found.sort(key=lambda t: tuple(domain.index(v) for v in t.summands))
        self.logger.info(f"{len(found)} maximal {self.m}-rigid objects for {self.context.quiver.label}")
        return found

    def complements(self, partial: MRigidObject) -> List[DVertex]:
        """Vertices completing an almost complete m-rigid object"""
        graph = self.compatibility_graph()
        MRigidObjectValidator(graph).validate(partial.summands, size=self.context.n - 1)
        return [v for v in graph.nodes if graph.self_rigid[v] and self._extends(v, partial.summands)]

    def is_m_cluster_tilting(self, t: MRigidObject) -> bool:
        """Every vertex, self-rigid or not, compatible with all of t already lies in t"""
        graph = self.compatibility_graph()
        MRigidObjectValidator(graph).validate(t.summands)
        return not any(self._extends(v, t.summands) for v in graph.nodes)

    def source_summand(self, t: MRigidObject) -> Optional[DVertex]:
        """A summand M of highest degree with Hom_D(M, T/M) = 0"""
        if not t.summands:
            return None
        top = max(v.shift for v in t.summands)
        candidates = [
            v for v in t.summands
            if v.shift == top and all(self.model.hom_derived(v, w) == 0 for w in t.summands if w != v)
        ]
        if not candidates:
            return None
        return max(candidates, key=lambda v: v.module.slice_index)

    # ========== TILTING MODULES ==========

    def tilting_modules(self) -> List[Tuple[ARVertex, ...]]:
        """Basic tilting modules: n pairwise Ext^1-orthogonal indecomposables"""
        ar = self.context.ar
        hammock = self.model.hammock
        rigid = [v for v in ar.vertices if hammock.ext(v, v) == 0]
        graph = nx.Graph()
        graph.add_nodes_from(rigid)
        for a, b in combinations(rigid, 2):
            if hammock.ext(a, b) == 0 and hammock.ext(b, a) == 0:
                graph.add_edge(a, b)
        if not rigid:
            return [()]
        result = [
            tuple(sorted(clique, key=lambda v: v.slice_index))
            for clique in nx.find_cliques(graph)
            if len(clique) == self.context.n
        ]
        result.sort(key=lambda modules: tuple(v.slice_index for v in modules))
        self.logger.debug(f"{len(result)} tilting modules for {ar.quiver.label}")
        return result

    def embed_module(self, modules: Iterable[ARVertex]) -> MRigidObject:
        """A set of modules placed in degree 0"""
        vertices = [DVertex(module, 0) for module in modules]
        return MRigidObject.from_vertices(vertices, maximal=self.is_maximal(vertices))
