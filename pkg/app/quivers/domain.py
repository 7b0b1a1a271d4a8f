"""
Domain types of the quivers app: quivers, dimension vectors and the
knitted Auslander-Reiten quiver of mod H.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx


@dataclass(frozen=True)
class DimVector:
    """Dimension vector of an H-module, indexed by the sorted vertex labels"""
    labels: Tuple[str, ...]
    values: Tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.values):
            raise ValueError(f"{len(self.values)} entries for {len(self.labels)} vertices")
        if any(value < 0 for value in self.values):
            raise ValueError(f"Negative entry in dimension vector {self.values}")

    @classmethod
    def from_mapping(cls, labels: Sequence[str], entries: Mapping[str, int]) -> 'DimVector':
        return cls(tuple(labels), tuple(int(entries.get(label, 0)) for label in labels))

    def __getitem__(self, label: str) -> int:
        return self.values[self.labels.index(label)]

    def as_dict(self) -> Dict[str, int]:
        return dict(zip(self.labels, self.values))

    def is_zero(self) -> bool:
        return not any(self.values)

    def total(self) -> int:
        return sum(self.values)

    def __str__(self) -> str:
        if all(value < 10 for value in self.values):
            return ''.join(str(value) for value in self.values)
        return '(' + ','.join(str(value) for value in self.values) + ')'


@dataclass(frozen=True)
class Quiver:
    """
    Finite quiver without relations. Vertices are kept in lexicographic
    order, which fixes the printing order of dimension vectors.
    """
    vertices: Tuple[str, ...]
    arrows: Tuple[Tuple[str, str], ...]
    name: str = field(default='', compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'vertices', tuple(sorted(self.vertices)))
        object.__setattr__(self, 'arrows', tuple(sorted(tuple(arrow) for arrow in self.arrows)))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def label(self) -> str:
        return self.name or f"quiver[{','.join(f'{s}->{t}' for s, t in self.arrows)}]"

    @cached_property
    def digraph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.arrows)
        return graph

    def successors(self, vertex: str) -> List[str]:
        return sorted(self.digraph.successors(vertex))

    def predecessors(self, vertex: str) -> List[str]:
        return sorted(self.digraph.predecessors(vertex))

    @cached_property
    def path_counts(self) -> Dict[Tuple[str, str], int]:
        """Number of paths i -> j, the trivial path included"""
        order = list(nx.topological_sort(self.digraph))
        counts = {}
        for source in self.vertices:
            reach = {vertex: 0 for vertex in self.vertices}
            reach[source] = 1
            for vertex in order:
                if reach[vertex]:
                    for target in self.digraph.successors(vertex):
                        reach[target] += reach[vertex]
            for target, value in reach.items():
                counts[(source, target)] = value
        return counts

    def dim_vector(self, entries: Mapping[str, int]) -> DimVector:
        return DimVector.from_mapping(self.vertices, entries)

    def simple_dim(self, vertex: str) -> DimVector:
        return self.dim_vector({vertex: 1})

    def projective_dim(self, vertex: str) -> DimVector:
        """dim P(i)_j counts the paths i -> j"""
        return self.dim_vector({j: self.path_counts[(vertex, j)] for j in self.vertices})

    def injective_dim(self, vertex: str) -> DimVector:
        """dim I(i)_j counts the paths j -> i"""
        return self.dim_vector({j: self.path_counts[(j, vertex)] for j in self.vertices})

    def underlying_edges(self) -> List[Tuple[str, str]]:
        return [tuple(sorted(arrow)) for arrow in self.arrows]

    def to_dict(self) -> Dict[str, list]:
        return {'vertices': list(self.vertices), 'arrows': [list(arrow) for arrow in self.arrows]}


@dataclass(frozen=True, eq=False)
class ARVertex:
    """
    Indecomposable H-module, identified by its dimension vector.
    (orbit, level) locates the module as tau^{-level} P(orbit).
    """
    dim: DimVector
    orbit: str
    level: int
    slice_index: int
    projective_of: Optional[str] = None
    injective_of: Optional[str] = None

    @property
    def id(self) -> str:
        return str(self.dim)

    @property
    def name(self) -> str:
        return str(self.dim)

    @property
    def is_projective(self) -> bool:
        return self.projective_of is not None

    @property
    def is_injective(self) -> bool:
        return self.injective_of is not None

    def __eq__(self, other) -> bool:
        return isinstance(other, ARVertex) and self.dim == other.dim

    def __hash__(self) -> int:
        return hash(self.dim)

    def __lt__(self, other: 'ARVertex') -> bool:
        return self.slice_index < other.slice_index

    def __repr__(self) -> str:
        return f"ARVertex({self.name})"


@dataclass(frozen=True)
class Mesh:
    start: ARVertex
    middles: Tuple[ARVertex, ...]
    end: ARVertex


class ARQuiver:
    """Knitted Auslander-Reiten quiver of mod H; immutable once built"""

    def __init__(self, quiver: Quiver, vertices: Iterable[ARVertex],
                 arrows: Iterable[Tuple[ARVertex, ARVertex]], meshes: Iterable[Mesh]):
        self.quiver = quiver
        self.vertices: Tuple[ARVertex, ...] = tuple(sorted(vertices, key=lambda v: v.slice_index))
        self.arrows: Tuple[Tuple[ARVertex, ARVertex], ...] = tuple(
            sorted(arrows, key=lambda a: (a[0].slice_index, a[1].slice_index))
        )
        self.meshes: Tuple[Mesh, ...] = tuple(sorted(meshes, key=lambda mesh: mesh.end.slice_index))
        self.tau: Dict[ARVertex, ARVertex] = {mesh.end: mesh.start for mesh in self.meshes}
        self._tau_inverse = {start: end for end, start in self.tau.items()}
        self._by_coordinate = {(v.orbit, v.level): v for v in self.vertices}
        self._by_name = {v.name: v for v in self.vertices}
        self._predecessors: Dict[ARVertex, List[ARVertex]] = {v: [] for v in self.vertices}
        self._successors: Dict[ARVertex, List[ARVertex]] = {v: [] for v in self.vertices}
        for source, target in self.arrows:
            self._successors[source].append(target)
            self._predecessors[target].append(source)
        self._projectives = {v.projective_of: v for v in self.vertices if v.is_projective}
        self._injectives = {v.injective_of: v for v in self.vertices if v.is_injective}
        self._last_level: Dict[str, int] = {}
        for v in self.vertices:
            self._last_level[v.orbit] = max(self._last_level.get(v.orbit, -1), v.level)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, vertex: ARVertex) -> bool:
        return vertex in self._predecessors

    def tau_module(self, vertex: ARVertex) -> Optional[ARVertex]:
        """Module-level AR translate; None on projectives"""
        return self.tau.get(vertex)

    def tau_inverse_module(self, vertex: ARVertex) -> Optional[ARVertex]:
        return self._tau_inverse.get(vertex)

    def predecessors(self, vertex: ARVertex) -> List[ARVertex]:
        return self._predecessors[vertex]

    def successors(self, vertex: ARVertex) -> List[ARVertex]:
        return self._successors[vertex]

    def projective(self, label: str) -> ARVertex:
        return self._projectives[label]

    def injective(self, label: str) -> ARVertex:
        return self._injectives[label]

    @property
    def projectives(self) -> List[ARVertex]:
        return [v for v in self.vertices if v.is_projective]

    @property
    def injectives(self) -> List[ARVertex]:
        return [v for v in self.vertices if v.is_injective]

    def at(self, orbit: str, level: int) -> Optional[ARVertex]:
        return self._by_coordinate.get((orbit, level))

    def last_level(self, orbit: str) -> int:
        return self._last_level[orbit]

    def by_name(self, name: str) -> Optional[ARVertex]:
        return self._by_name.get(name)

    def by_dim(self, dim: DimVector) -> Optional[ARVertex]:
        return self._by_name.get(str(dim)) if dim.labels == self.quiver.vertices else None
