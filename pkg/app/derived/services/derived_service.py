"""
This module contains the derived model: D^b(H) on the translation
quiver ZQ^op, with shift, tau_D, G = tau_D^{-1}[m], degree and Hom
dimensions.

Coordinates extend those of the knitting: the module at (o, q) is
tau^{-q} P(o), and the shift acts by (o, q) -> (s(o), c(o) + q) where
I(o) sits at (s(o), c(o) - 1).
"""

from typing import Dict, Iterable, List, Tuple, Union
import logging

from core.utils.constants import ERROR_MESSAGES as CORE_ERROR_MESSAGES
from core.utils.exceptions import WindowOverflowException
from quivers.domain import ARQuiver, ARVertex
from quivers.services.hammock_service import HammockService

from ..domain import DObject, DVertex, Window
from ..utils.constants import ERROR_MESSAGES, MAX_COORDINATE_STEPS, ORBIT_RANGE
from ..utils.exceptions import CoordinateException, OrbitWindowException
from ..utils.validators import ObjectNameValidator

logger = logging.getLogger(__name__)

Coordinate = Tuple[str, int]


class DerivedModel:
    def __init__(self, ar: ARQuiver, m: int, window: Window):
        self.logger = logger
        self.ar = ar
        self.quiver = ar.quiver
        self.m = m
        self.window = window
        self.hammock = HammockService(ar)
        self.name_validator = ObjectNameValidator(ar)
        self._nakayama: Dict[str, Tuple[str, int]] = {
            o: (ar.injective(o).orbit, ar.injective(o).level + 1) for o in self.quiver.vertices
        }
        self._nakayama_inverse = {target: o for o, (target, _) in self._nakayama.items()}
        self._predecessors: Dict[ARVertex, List[Tuple[ARVertex, int]]] = {}
        self._successors: Dict[ARVertex, List[Tuple[ARVertex, int]]] = {}
        for vertex in ar.vertices:
            o, q = vertex.orbit, vertex.level
            self._predecessors[vertex] = self._read_back(
                [(j, q) for j in self.quiver.successors(o)]
                + [(i, q - 1) for i in self.quiver.predecessors(o)]
            )
            self._successors[vertex] = self._read_back(
                [(i, q) for i in self.quiver.predecessors(o)]
                + [(j, q + 1) for j in self.quiver.successors(o)]
            )
        self._check_coordinates()

    # ========== WINDOW ==========

    def check(self, *vertices: DVertex):
        for vertex in vertices:
            if vertex.shift not in self.window:
                raise WindowOverflowException(CORE_ERROR_MESSAGES['WINDOW_OVERFLOW'].format(
                    shift=vertex.shift, low=self.window.low, high=self.window.high
                ))

    def in_window(self, vertex: DVertex) -> bool:
        return vertex.shift in self.window

    def vertices(self) -> List[DVertex]:
        """Every window indecomposable, ordered by (shift, slice)"""
        return [DVertex(module, shift) for shift in self.window.shifts() for module in self.ar.vertices]

    def vertex(self, module: ARVertex, shift: int = 0) -> DVertex:
        vertex = DVertex(module, shift)
        self.check(vertex)
        return vertex

    def parse_name(self, name: str) -> DVertex:
        module, shift = self.name_validator.validate(name)
        return self.vertex(module, shift)

    # ========== FUNCTORS ==========

    def degree(self, x: DVertex) -> int:
        return x.shift

    def shift(self, x: Union[DVertex, DObject], k: int, checked: bool = True) -> Union[DVertex, DObject]:
        if isinstance(x, DObject):
            result = DObject.from_multiplicities(
                (self.shift(vertex, k, checked), multiplicity) for vertex, multiplicity in x.summands
            )
            return result
        result = x.shifted(k)
        if checked:
            self.check(result)
        return result

    def tau_derived(self, x: DVertex, checked: bool = True) -> DVertex:
        """tau on non-projectives, tau_D P(i) = I(i)[-1]"""
        tau = self.ar.tau_module(x.module)
        if tau is not None:
            result = DVertex(tau, x.shift)
        else:
            result = DVertex(self.ar.injective(x.module.projective_of), x.shift - 1)
        if checked:
            self.check(result)
        return result

    def tau_inverse_derived(self, x: DVertex, checked: bool = True) -> DVertex:
        """tau^{-1} on non-injectives, tau_D^{-1} I(i) = P(i)[1]"""
        tau_inverse = self.ar.tau_inverse_module(x.module)
        if tau_inverse is not None:
            result = DVertex(tau_inverse, x.shift)
        else:
            result = DVertex(self.ar.projective(x.module.injective_of), x.shift + 1)
        if checked:
            self.check(result)
        return result

    def G_apply(self, x: DVertex, t: int, checked: bool = True) -> DVertex:
        """G^t with G = tau_D^{-1}[m]"""
        result = x
        for _ in range(abs(t)):
            if t > 0:
                result = self.tau_inverse_derived(result.shifted(self.m), checked=False)
            else:
                result = self.tau_derived(result, checked=False).shifted(-self.m)
        if checked:
            self.check(result)
        return result

    def in_fundamental_domain(self, x: DVertex) -> bool:
        return 0 <= x.shift < self.m or (x.shift == self.m and x.module.is_projective)

    def in_fundamental_domain_minus(self, x: DVertex) -> bool:
        return 0 <= x.shift < self.m

    def to_fundamental_domain(self, x: DVertex) -> DVertex:
        """The unique G-twist of x lying in mod H v ... v (mod H)[m-1] v H[m]"""
        result = x
        for _ in range(MAX_COORDINATE_STEPS):
            if self.in_fundamental_domain(result):
                return result
            result = self.G_apply(result, 1 if result.shift < 0 else -1, checked=False)
        raise CoordinateException(ERROR_MESSAGES['COORDINATES'].format(
            vertex=x.name, detail='no representative in the fundamental domain'
        ))

    # ========== HOM DIMENSIONS ==========

    def hom_unchecked(self, x: DVertex, y: DVertex) -> int:
        gap = y.shift - x.shift
        if gap == 0:
            return self.hammock.hom(x.module, y.module)
        if gap == 1:
            return self.hammock.ext(x.module, y.module)
        return 0

    def hom_derived(self, x: DVertex, y: DVertex) -> int:
        """
        dim Hom_D(x, y): Hom_H at equal degree, Ext^1_H one degree up,
        zero otherwise since H is hereditary
        """
        self.check(x, y)
        return self.hom_unchecked(x, y)

    def hom_object(self, a: DObject, b: DObject) -> int:
        return sum(
            ma * mb * self.hom_derived(x, y) for x, ma in a.summands for y, mb in b.summands
        )

    def hom_orbit(self, x: DVertex, y: DVertex, k: int, m: int = None) -> int:
        """
        sum_t dim Hom_D(x, G^t y[k]) over t in [-2, 2]; the t = +-2 terms
        must vanish
        """
        if m is not None and m != self.m:
            raise ValueError(f"Model built for m={self.m}, asked for m={m}")
        self.check(x, y)
        total = 0
        for t, value in self.orbit_terms(x, y, k).items():
            if abs(t) == ORBIT_RANGE and value:
                self.logger.error(f"Orbit term t={t} survives for {x.name}, {y.name}")
                raise OrbitWindowException(ERROR_MESSAGES['ORBIT_TERM'].format(
                    t=t, source=x.name, target=y.name, k=k, value=value
                ))
            total += value
        return total

    def orbit_terms(self, x: DVertex, y: DVertex, k: int = 0, reach: int = ORBIT_RANGE) -> Dict[int, int]:
        """dim Hom_D(x, G^t y[k]) for t in [-reach, reach]"""
        return {
            t: self.hom_unchecked(x, self.G_apply(y, t, checked=False).shifted(k))
            for t in range(-reach, reach + 1)
        }

    def k0_class(self, x: Union[DVertex, DObject]) -> Tuple[int, ...]:
        """Class in the Grothendieck group: (-1)^shift dim"""
        if isinstance(x, DVertex):
            sign = -1 if x.shift % 2 else 1
            return tuple(sign * value for value in x.module.dim.values)
        total = [0] * self.quiver.n
        for vertex, multiplicity in x.summands:
            total = [a + multiplicity * b for a, b in zip(total, self.k0_class(vertex))]
        return tuple(total)

    # ========== COORDINATES ==========

    def shift_coordinate(self, coordinate: Coordinate, k: int = 1) -> Coordinate:
        o, q = coordinate
        for _ in range(abs(k)):
            if k > 0:
                target, offset = self._nakayama[o]
                o, q = target, offset + q
            else:
                o = self._nakayama_inverse[o]
                q = q - self._nakayama[o][1]
        return o, q

    def coordinate(self, x: DVertex) -> Coordinate:
        return self.shift_coordinate((x.module.orbit, x.module.level), x.shift)

    def from_coordinate(self, orbit: str, level: int) -> DVertex:
        o, q, shift = orbit, level, 0
        for _ in range(MAX_COORDINATE_STEPS):
            if q < 0:
                o, q = self.shift_coordinate((o, q), 1)
                shift -= 1
            elif q > self.ar.last_level(o):
                o, q = self.shift_coordinate((o, q), -1)
                shift += 1
            else:
                return DVertex(self.ar.at(o, q), shift)
        raise CoordinateException(ERROR_MESSAGES['COORDINATES'].format(
            vertex=(orbit, level), detail='coordinate does not resolve to a shifted module'
        ))

    def _read_back(self, coordinates: Iterable[Coordinate]) -> List[Tuple[ARVertex, int]]:
        result = []
        for coordinate in coordinates:
            vertex = self.from_coordinate(*coordinate)
            result.append((vertex.module, vertex.shift))
        return sorted(result, key=lambda item: (item[1], item[0].slice_index))

    def predecessors(self, x: DVertex) -> List[DVertex]:
        return [DVertex(module, x.shift + offset) for module, offset in self._predecessors[x.module]]

    def successors(self, x: DVertex) -> List[DVertex]:
        return [DVertex(module, x.shift + offset) for module, offset in self._successors[x.module]]

    def _check_coordinates(self):
        """The coordinate model must restrict to the knitted AR quiver"""
        for vertex in self.ar.vertices:
            module_predecessors = sorted(
                (w for w, offset in self._predecessors[vertex] if offset == 0),
                key=lambda w: w.slice_index,
            )
            if module_predecessors != sorted(self.ar.predecessors(vertex), key=lambda w: w.slice_index):
                raise CoordinateException(ERROR_MESSAGES['COORDINATES'].format(
                    vertex=vertex.name, detail='arrows inside mod H differ'
                ))
            here = DVertex(vertex, 0)
            if self.from_coordinate(vertex.orbit, vertex.level - 1) != self.tau_derived(here, checked=False):
                raise CoordinateException(ERROR_MESSAGES['COORDINATES'].format(
                    vertex=vertex.name, detail='translation differs from tau_D'
                ))
            if vertex.is_projective:
                expected = {
                    (self.ar.injective(l), -1) for l in self.quiver.predecessors(vertex.projective_of)
                }
                found = {(w, offset) for w, offset in self._predecessors[vertex] if offset == -1}
                if expected != found:
                    raise CoordinateException(ERROR_MESSAGES['COORDINATES'].format(
                        vertex=vertex.name, detail='connecting arrows I(l)[-1] -> P(i) differ'
                    ))
