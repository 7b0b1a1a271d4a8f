"""
This module contains the mesh category: explicit bases of Hom spaces as
paths in ZQ^op modulo the mesh relations, composition, factoring
subspaces and minimal approximations.

Mesh relation at z: the sum over the middles w of the paths
tau z -> w -> z is zero, every coefficient being +1.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple
import logging
import threading

from core.utils.linalg import rank, reduce_vector, row_reduce

from ..domain import ApproxTriangle, DObject, DVertex, HomBasis, HomElement
from ..utils.constants import ERROR_MESSAGES, LOGGING_CONFIG
from ..utils.exceptions import ApproximationException, EndpointMismatchException, HomBasisException
from .derived_service import DerivedModel

logger = logging.getLogger(LOGGING_CONFIG['MESH_LOGGER'])

Vector = List[Fraction]


@dataclass
class _SourceTable:
    """Hom(x, -) over the two degrees a nonzero map out of x can reach"""
    source: DVertex
    dims: Dict[DVertex, int] = field(default_factory=dict)
    origins: Dict[DVertex, List[Tuple[Optional[DVertex], int]]] = field(default_factory=dict)
    pushes: Dict[Tuple[DVertex, DVertex], List[Vector]] = field(default_factory=dict)


class MeshCategory:
    def __init__(self, model: DerivedModel):
        self.logger = logger
        self.model = model
        self._tables: Dict[DVertex, _SourceTable] = {}
        self._lock = threading.RLock()

    # ========== BASES ==========

    def _table(self, x: DVertex) -> _SourceTable:
        table = self._tables.get(x)
        if table is None:
            with self._lock:
                table = self._tables.get(x)
                if table is None:
                    self.model.check(x)
                    table = self._build_table(x)
                    self._tables[x] = table
        return table

    def _build_table(self, x: DVertex) -> _SourceTable:
        model = self.model
        table = _SourceTable(source=x)
        region = [
            DVertex(module, shift)
            for shift in (x.shift, x.shift + 1) if shift in model.window
            for module in model.ar.vertices
        ]
        for z in region:
            if z.sort_key < x.sort_key:
                table.dims[z] = 0
                table.origins[z] = []
                continue
            if z == x:
                table.dims[z] = 1
                table.origins[z] = [(None, 0)]
                continue
            predecessors = [w for w in model.predecessors(z) if table.dims.get(w, 0) > 0]
            columns = [(w, j) for w in predecessors for j in range(table.dims[w])]
            tau_z = model.tau_derived(z, checked=False)
            relations = []
            for b in range(table.dims.get(tau_z, 0)):
                row = [Fraction(0)] * len(columns)
                offset = 0
                for w in predecessors:
                    for j, value in enumerate(table.pushes[(tau_z, w)][b]):
                        row[offset + j] += value
                    offset += table.dims[w]
                relations.append(row)
            reduced, pivots = row_reduce(relations, len(columns))
            pivot_set = set(pivots)
            free = [c for c in range(len(columns)) if c not in pivot_set]
            table.dims[z] = len(free)
            table.origins[z] = [columns[c] for c in free]
            for w in predecessors:
                images = []
                for j in range(table.dims[w]):
                    unit = [Fraction(1 if columns[c] == (w, j) else 0) for c in range(len(columns))]
                    remainder = reduce_vector(unit, reduced, pivots)
                    images.append([remainder[c] for c in free])
                table.pushes[(w, z)] = images
        for z in region:
            expected = model.hom_unchecked(x, z)
            if table.dims[z] != expected:
                self.logger.error(f"Mesh basis mismatch for Hom({x.name}, {z.name})")
                raise HomBasisException(ERROR_MESSAGES['HOM_BASIS'].format(
                    source=x.name, target=z.name, basis=table.dims[z], hammock=expected
                ))
        self.logger.debug(f"Mesh bases out of {x.name}: {sum(table.dims.values())} basis vectors")
        return table

    def dim(self, x: DVertex, y: DVertex) -> int:
        return self._table(x).dims.get(y, 0)

    def representative_path(self, x: DVertex, y: DVertex, index: int) -> Tuple[DVertex, ...]:
        table = self._table(x)
        path = [y]
        current, position = table.origins[y][index]
        while current is not None:
            path.append(current)
            current, position = table.origins[current][position]
        return tuple(reversed(path))

    def hom_basis(self, x: DVertex, y: DVertex) -> HomBasis:
        """Basis of Hom(x, y), each element given by one representative path"""
        self.model.check(x, y)
        paths = tuple(self.representative_path(x, y, i) for i in range(self.dim(x, y)))
        return HomBasis(source=x, target=y, paths=paths)

    def basis_elements(self, x: DVertex, y: DVertex) -> List[HomElement]:
        size = self.dim(x, y)
        return [
            HomElement(x, y, tuple(Fraction(1 if k == i else 0) for k in range(size)))
            for i in range(size)
        ]

    def identity(self, x: DVertex) -> HomElement:
        return HomElement(x, x, (Fraction(1),))

    # ========== COMPOSITION ==========

    def push_path(self, x: DVertex, vector: Sequence[Fraction], path: Sequence[DVertex]) -> Vector:
        """Post-compose an element of Hom(x, path[0]) with the path"""
        table = self._table(x)
        current = [Fraction(value) for value in vector]
        for u, v in zip(path, path[1:]):
            size = table.dims.get(v, 0)
            if size == 0:
                return []
            images = table.pushes.get((u, v))
            result = [Fraction(0)] * size
            if images is not None:
                for coefficient, image in zip(current, images):
                    if coefficient:
                        for k, value in enumerate(image):
                            result[k] += coefficient * value
            current = result
        return current

    def compose(self, f: HomElement, g: HomElement) -> HomElement:
        """g after f, reduced to the basis of Hom(f.source, g.target)"""
        if f.target != g.source:
            raise EndpointMismatchException(ERROR_MESSAGES['ENDPOINTS'].format(
                middle=f.target.name, other=g.source.name
            ))
        x, y, z = f.source, f.target, g.target
        size = self.dim(x, z)
        result = [Fraction(0)] * size
        if size and not f.is_zero():
            for index, coefficient in enumerate(g.coefficients):
                if coefficient:
                    pushed = self.push_path(x, f.coefficients, self.representative_path(y, z, index))
                    for k, value in enumerate(pushed):
                        result[k] += coefficient * value
        return HomElement(x, z, tuple(result))

    def push_twisted(self, f: HomElement, g: HomElement, t: int) -> HomElement:
        """
        G^t(g) after f, for f: x -> G^t y and g: y -> z; the G-image of a
        path is the path through the G-images of its vertices
        """
        x, z = f.source, g.target
        target = self.model.G_apply(z, t, checked=False)
        size = self.dim(x, target) if target.shift in self.model.window else 0
        result = [Fraction(0)] * size
        if size and not f.is_zero():
            for index, coefficient in enumerate(g.coefficients):
                if coefficient:
                    path = [
                        self.model.G_apply(v, t, checked=False)
                        for v in self.representative_path(g.source, z, index)
                    ]
                    pushed = self.push_path(x, f.coefficients, path)
                    for k, value in enumerate(pushed):
                        result[k] += coefficient * value
        return HomElement(x, target, tuple(result))

    def factoring_dim(self, x: DVertex, z: DVertex, through: Iterable[DVertex]) -> int:
        """dim of the span of all compositions x -> w -> z, w in through"""
        size = self.dim(x, z)
        if size == 0:
            return 0
        vectors = []
        for w in through:
            if not self.model.in_window(w) or self.dim(x, w) == 0 or self.dim(w, z) == 0:
                continue
            for f in self.basis_elements(x, w):
                for g in self.basis_elements(w, z):
                    vectors.append(list(self.compose(f, g).coefficients))
        return rank(vectors, size)

    # ========== APPROXIMATIONS ==========

    def _right_property(self, x: DVertex, cls: Sequence[DVertex],
                        components: Sequence[Tuple[DVertex, int]]) -> bool:
        for other in cls:
            size = self.dim(other, x)
            if size == 0:
                continue
            vectors = []
            for c, j in components:
                component = self.basis_elements(c, x)[j]
                for h in self.basis_elements(other, c):
                    vectors.append(list(self.compose(h, component).coefficients))
            if rank(vectors, size) != size:
                return False
        return True

    def _left_property(self, x: DVertex, cls: Sequence[DVertex],
                       components: Sequence[Tuple[DVertex, int]]) -> bool:
        for other in cls:
            size = self.dim(x, other)
            if size == 0:
                continue
            vectors = []
            for c, j in components:
                component = self.basis_elements(x, c)[j]
                for h in self.basis_elements(c, other):
                    vectors.append(list(self.compose(component, h).coefficients))
            if rank(vectors, size) != size:
                return False
        return True

    def minimal_right_approximation(
        self, x: DVertex, cls: Iterable[DVertex],
        cone: Optional[Callable[[DVertex], DObject]] = None,
    ) -> ApproxTriangle:
        """
        Minimal right add(cls)-approximation A -> x
        Args:
            x: Target indecomposable
            cls: Window indecomposables spanning the approximating class
            cone: Optional callback computing the third term of the triangle
        Returns:
            ApproxTriangle whose components generate Hom(c, x) for every c in cls
        Raises:
            ApproximationException: The approximation or minimality check fails
        """
        return self._approximation(x, cls, cone, side='right')

    def minimal_left_approximation(
        self, x: DVertex, cls: Iterable[DVertex],
        cone: Optional[Callable[[DVertex], DObject]] = None,
    ) -> ApproxTriangle:
        """Minimal left add(cls)-approximation x -> A, dual to the right one"""
        return self._approximation(x, cls, cone, side='left')

    def _approximation(self, x: DVertex, cls: Iterable[DVertex],
                       cone: Optional[Callable[[DVertex], DObject]], side: str) -> ApproxTriangle:
        cls = sorted(set(cls), key=lambda v: v.sort_key)
        self.model.check(x, *cls)
        if x in cls:
            return ApproxTriangle(
                approx_source=DObject.from_vertices([x]),
                components=((x, (Fraction(1),)),),
                target=x, cone=DObject(), side=side,
            )
        if side == 'right':
            candidates = [(c, j) for c in cls for j in range(self.dim(c, x))]
            holds = self._right_property
        else:
            candidates = [(c, j) for c in cls for j in range(self.dim(x, c))]
            holds = self._left_property
        if not candidates:
            return ApproxTriangle(
                approx_source=DObject(), components=(), target=x,
                cone=DObject.from_vertices([x]) if side == 'right' else None, side=side,
            )
        chosen = list(candidates)
        for candidate in candidates:
            trial = [c for c in chosen if c != candidate]
            if holds(x, cls, trial):
                chosen = trial
        if not holds(x, cls, chosen):
            raise ApproximationException(ERROR_MESSAGES['APPROXIMATION'].format(
                target=x.name, cls=[c.name for c in cls], detail='approximation property fails'
            ))
        self._check_multiplicities(x, cls, chosen, side)
        components = []
        for c, j in chosen:
            size = self.dim(c, x) if side == 'right' else self.dim(x, c)
            components.append((c, tuple(Fraction(1 if k == j else 0) for k in range(size))))
        approx_source = DObject.from_vertices(c for c, _ in chosen)
        self.logger.debug(f"{side} approximation of {x.name}: {approx_source}")
        return ApproxTriangle(
            approx_source=approx_source,
            components=tuple(components),
            target=x,
            cone=cone(x) if cone is not None else None,
            side=side,
        )

    def _check_multiplicities(self, x: DVertex, cls: Sequence[DVertex],
                              chosen: Sequence[Tuple[DVertex, int]], side: str):
        """Each c appears dim Hom(c, x) - dim(maps through the rest of cls) times"""
        for c in cls:
            others = [v for v in cls if v != c]
            if side == 'right':
                expected = self.dim(c, x) - self.factoring_dim(c, x, others)
            else:
                expected = self.dim(x, c) - self.factoring_dim(x, c, others)
            found = sum(1 for v, _ in chosen if v == c)
            if found != expected:
                raise ApproximationException(ERROR_MESSAGES['APPROXIMATION'].format(
                    target=x.name, cls=[v.name for v in cls],
                    detail=f"{c.name} appears {found} times, top has dimension {expected}",
                ))
