"""
Domain types of the clusters app: the fundamental domain of C_m(H), its
compatibility graph, m-rigid objects and the results of normalization,
localisation and the endomorphism algebra computations.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx

from derived.domain import DObject, DVertex
from quivers.domain import ARVertex, Quiver


def domain_key(vertex: DVertex) -> Tuple[int, int]:
    """Order of the fundamental domain: slice first, then shift"""
    return vertex.module.slice_index, vertex.shift


@dataclass(frozen=True)
class FundamentalDomain:
    m: int
    vertices: Tuple[DVertex, ...]

    def index(self, vertex: DVertex) -> int:
        return self.vertices.index(vertex)

    def __contains__(self, vertex: DVertex) -> bool:
        return vertex in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


@dataclass
class CompatibilityGraph:
    """
    Nodes are the fundamental domain; x ~ y iff Ext^k_C vanishes both ways
    for k = 1..m. self_rigid records Ext^k_C(x, x) = 0.
    """
    m: int
    domain: FundamentalDomain
    graph: nx.Graph
    self_rigid: Dict[DVertex, bool]

    def adjacent(self, x: DVertex, y: DVertex) -> bool:
        return self.graph.has_edge(x, y)

    @property
    def nodes(self) -> Tuple[DVertex, ...]:
        return self.domain.vertices

    def edge_count(self) -> int:
        return self.graph.number_of_edges()


@dataclass(frozen=True)
class MRigidObject:
    """Basic object of C_m(H) given by its summands in the fundamental domain"""
    summands: Tuple[DVertex, ...]
    maximal: bool = False

    @classmethod
    def from_vertices(cls, vertices, maximal: bool = False) -> 'MRigidObject':
        return cls(tuple(sorted(set(vertices), key=domain_key)), maximal)

    @property
    def names(self) -> List[str]:
        return [vertex.name for vertex in self.summands]

    def without(self, vertex: DVertex) -> 'MRigidObject':
        return MRigidObject(tuple(v for v in self.summands if v != vertex))

    def __contains__(self, vertex: DVertex) -> bool:
        return vertex in self.summands

    def __len__(self) -> int:
        return len(self.summands)

    def __str__(self) -> str:
        return '{' + ', '.join(self.names) + '}'


@dataclass(frozen=True)
class NormalizedObject:
    """
    The same object read through a slice of ZQ^op: H0 has the slice as
    its projectives, positions sends each original summand to its
    representative in mod H0 v ... v (mod H0)[m-1]
    """
    original: MRigidObject
    slice_heights: Dict[str, int]
    quiver: Quiver
    object: MRigidObject
    positions: Dict[DVertex, DVertex]

    @property
    def is_identity(self) -> bool:
        return not any(self.slice_heights.values())


@dataclass(frozen=True)
class PerpendicularData:
    """
    U = {U : Hom(X, U) = 0 = Ext(X, U)} for M = X[d]; U is equivalent to
    mod H' through U -> (dim Hom(P'_a, U))_a
    """
    M: DVertex
    base_module: ARVertex
    U_members: Tuple[ARVertex, ...]
    projectives_of_U: Tuple[ARVertex, ...]
    H_prime: Quiver
    h_prime_modules: Dict[ARVertex, ARVertex]
    D0_members: frozenset = field(default_factory=frozenset)

    def in_D0(self, vertex: DVertex) -> bool:
        return vertex in self.D0_members


@dataclass(frozen=True)
class LocalisedObject:
    """Image of T/M under D -> D/thick(M), read in C_m(H')"""
    object: MRigidObject
    M: DVertex
    perpendicular: PerpendicularData
    image_in_D: Tuple[DObject, ...]
    image: MRigidObject
    maximal: bool


@dataclass(frozen=True)
class EndoAlgebraData:
    """
    Dimensions for End_C(T) with rows and columns in summand order:
    hom, radical, square of the radical and Gabriel arrows
    """
    object: MRigidObject
    hom_dims: Tuple[Tuple[int, ...], ...]
    rad_dims: Tuple[Tuple[int, ...], ...]
    rad_sq_dims: Tuple[Tuple[int, ...], ...]
    arrows: Tuple[Tuple[int, ...], ...]

    @property
    def total_dim(self) -> int:
        return sum(sum(row) for row in self.hom_dims)


@dataclass(frozen=True)
class FactorTheoremReport:
    """End_C(T)/(e_M) against End(localised object) for one summand M"""
    object: MRigidObject
    M: DVertex
    factor_dims: Tuple[Tuple[int, ...], ...]
    localised_dims: Tuple[Tuple[int, ...], ...]
    h_prime_dims: Tuple[Tuple[int, ...], ...]
    quotient_arrows: Tuple[Tuple[int, ...], ...]
    h_prime_arrows: Tuple[Tuple[int, ...], ...]

    @property
    def passed(self) -> bool:
        return (
            self.factor_dims == self.localised_dims == self.h_prime_dims
            and self.quotient_arrows == self.h_prime_arrows
        )


@dataclass
class CheckResult:
    name: str
    status: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    elapsed: Optional[float] = None

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class VerificationReport:
    quiver: str
    m: int
    checks: List[CheckResult] = field(default_factory=list)
    counts: Dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def capped(self) -> bool:
        return any(check.status == 'capped' for check in self.checks)
