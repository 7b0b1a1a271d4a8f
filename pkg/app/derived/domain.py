"""
Domain types of the derived app: indecomposables of D^b(H) as shifted
modules, finite direct sums of them, Hom bases and approximation triangles.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from quivers.domain import ARVertex


@dataclass(frozen=True)
class Window:
    """Closed range of shifts the finite model of D^b(H) works in"""
    low: int
    high: int

    def __contains__(self, shift: int) -> bool:
        return self.low <= shift <= self.high

    def shifts(self) -> range:
        return range(self.low, self.high + 1)


@dataclass(frozen=True)
class DVertex:
    """The indecomposable module[shift]; its degree is the shift"""
    module: ARVertex
    shift: int

    @property
    def degree(self) -> int:
        return self.shift

    @property
    def name(self) -> str:
        return f"{self.module.name}[{self.shift}]"

    @property
    def sort_key(self) -> Tuple[int, int]:
        return self.shift, self.module.slice_index

    def shifted(self, k: int) -> 'DVertex':
        return DVertex(self.module, self.shift + k)

    def __lt__(self, other: 'DVertex') -> bool:
        return self.sort_key < other.sort_key

    def __repr__(self) -> str:
        return f"DVertex({self.name})"


@dataclass(frozen=True)
class DObject:
    """Finite direct sum of DVertices with positive multiplicities"""
    summands: Tuple[Tuple[DVertex, int], ...] = ()

    @classmethod
    def from_vertices(cls, vertices: Iterable[DVertex]) -> 'DObject':
        counts = Counter(vertices)
        return cls(tuple(sorted(counts.items(), key=lambda item: item[0].sort_key)))

    @classmethod
    def from_multiplicities(cls, multiplicities: Iterable[Tuple[DVertex, int]]) -> 'DObject':
        counts = Counter()
        for vertex, multiplicity in multiplicities:
            if multiplicity < 0:
                raise ValueError(f"Negative multiplicity for {vertex.name}")
            counts[vertex] += multiplicity
        return cls(tuple(sorted(
            ((v, k) for v, k in counts.items() if k > 0), key=lambda item: item[0].sort_key
        )))

    @property
    def basic(self) -> bool:
        return all(multiplicity == 1 for _, multiplicity in self.summands)

    def is_zero(self) -> bool:
        return not self.summands

    def vertices(self) -> List[DVertex]:
        """Summands repeated by multiplicity"""
        return [vertex for vertex, multiplicity in self.summands for _ in range(multiplicity)]

    def distinct(self) -> List[DVertex]:
        return [vertex for vertex, _ in self.summands]

    def multiplicity(self, vertex: DVertex) -> int:
        return dict(self.summands).get(vertex, 0)

    def as_indecomposable(self) -> Optional[DVertex]:
        if len(self.summands) == 1 and self.summands[0][1] == 1:
            return self.summands[0][0]
        return None

    def __add__(self, other: 'DObject') -> 'DObject':
        return DObject.from_multiplicities(list(self.summands) + list(other.summands))

    def __len__(self) -> int:
        return sum(multiplicity for _, multiplicity in self.summands)

    @property
    def names(self) -> List[str]:
        return [
            vertex.name if multiplicity == 1 else f"{multiplicity}*{vertex.name}"
            for vertex, multiplicity in self.summands
        ]

    def __str__(self) -> str:
        return ' + '.join(self.names) if self.summands else '0'


@dataclass(frozen=True)
class HomBasis:
    """
    Basis of Hom(source, target) in the mesh category. Every basis vector
    is represented by a single path, listed vertex by vertex.
    """
    source: DVertex
    target: DVertex
    paths: Tuple[Tuple[DVertex, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.paths)

    def element(self, index: int) -> List[Fraction]:
        return [Fraction(1 if k == index else 0) for k in range(self.dimension)]


@dataclass(frozen=True)
class ApproxTriangle:
    """
    Minimal approximation A -> X (right) or X -> A (left) by add of a
    class, with each component given as a coefficient vector in the Hom
    basis between its summand and X. cone is None when not computed.
    """
    approx_source: DObject
    components: Tuple[Tuple[DVertex, Tuple[Fraction, ...]], ...]
    target: DVertex
    cone: Optional[DObject]
    side: str = 'right'


@dataclass(frozen=True)
class HomElement:
    """A morphism source -> target as coordinates in the chosen Hom basis"""
    source: DVertex
    target: DVertex
    coefficients: Tuple[Fraction, ...]

    def is_zero(self) -> bool:
        return not any(self.coefficients)
