"""
This module contains the endomorphism algebra service.

For T_a, T_b in D_G, Hom_C(T_a, T_b) = Hom_D(T_a, T_b) + Hom_D(T_a, G T_b);
a map is a pair (f0, f1) and maps compose as
(g0, g1)(f0, f1) = (g0 f0, G(g0) f1 + g1 f0), the G^2 term being zero.
"""

from typing import List, Sequence, Tuple
import logging

from core.services.context_service import ClusterContext, ContextService
from core.utils.linalg import rank
from derived.domain import DObject, DVertex, HomElement

from ..domain import EndoAlgebraData, FactorTheoremReport, MRigidObject
from ..utils.constants import ERROR_MESSAGES, G_TWIST_RANGE
from ..utils.exceptions import EndoAlgebraException
from .localise_service import LocaliseService
from .slice_service import SliceService

logger = logging.getLogger(__name__)

CMap = Tuple[HomElement, HomElement]
Matrix = Tuple[Tuple[int, ...], ...]


class EndoService:
    def __init__(self, context: ClusterContext):
        self.logger = logger
        self.context = context
        self.model = context.model
        self.mesh = context.mesh
        self.m = context.m

    def _fail(self, t: MRigidObject, detail: str):
        self.logger.error(f"Endomorphism algebra of {t}: {detail}")
        raise EndoAlgebraException(ERROR_MESSAGES['ENDO'].format(object=str(t), detail=detail))

    # ========== MAPS IN C ==========

    def twist(self, x: DVertex) -> DVertex:
        return self.model.G_apply(x, 1, checked=False)

    def _part(self, a: DVertex, target: DVertex) -> List[HomElement]:
        if self.model.hom_unchecked(a, target) == 0:
            return []
        self.model.check(target)
        return self.mesh.basis_elements(a, target)

    def _zero(self, a: DVertex, target: DVertex) -> HomElement:
        return HomElement(a, target, tuple([0] * self.model.hom_unchecked(a, target)))

    def hom_c_dim(self, a: DVertex, b: DVertex) -> int:
        value = self.model.hom_unchecked(a, b) + self.model.hom_unchecked(a, self.twist(b))
        if value != self.model.hom_orbit(a, b, 0):
            raise EndoAlgebraException(ERROR_MESSAGES['ENDO'].format(
                object=f"{a.name}, {b.name}", detail='Hom_C has terms beyond Hom_D(a, b) + Hom_D(a, Gb)'
            ))
        return value

    def hom_c_basis(self, a: DVertex, b: DVertex) -> List[CMap]:
        gb = self.twist(b)
        return (
            [(f, self._zero(a, gb)) for f in self._part(a, b)]
            + [(self._zero(a, b), f) for f in self._part(a, gb)]
        )

    def radical_basis(self, a: DVertex, b: DVertex) -> List[CMap]:
        """Non-isomorphisms; on the diagonal only the G-part, End_D(a) being the field"""
        if a != b:
            return self.hom_c_basis(a, b)
        return [(self._zero(a, a), f) for f in self._part(a, self.twist(a))]

    def compose_c(self, f: CMap, g: CMap) -> List:
        """g after f as a coordinate vector of Hom_D(a, c) + Hom_D(a, Gc)"""
        f0, f1 = f
        g0, g1 = g
        h0 = self.mesh.compose(f0, g0)
        twisted = self.mesh.push_twisted(f1, g0, 1)
        direct = self.mesh.compose(f0, g1)
        size = self.model.hom_unchecked(f0.source, g1.target)
        h1 = [0] * size
        for part in (twisted, direct):
            for k, value in enumerate(part.coefficients):
                h1[k] += value
        return list(h0.coefficients) + h1

    def _span(self, a: DVertex, c: DVertex, middles: Sequence[DVertex], basis) -> List[List]:
        vectors = []
        for b in middles:
            for u in basis(a, b):
                for v in basis(b, c):
                    vectors.append(self.compose_c(u, v))
        return vectors

    # ========== ALGEBRA DATA ==========

    def endo_dims(self, t: MRigidObject) -> EndoAlgebraData:
        """
        Hom, radical and Gabriel quiver dimensions of End_C(T)
        Args:
            t: m-rigid object; rows and columns follow t.summands
        Returns:
            EndoAlgebraData
        Raises:
            EndoAlgebraException: An invariant of the algebra fails
            WindowOverflowException: A G-twist needed for a basis leaves the window
        """
        summands = t.summands
        hom, rad, rad_sq, arrows = [], [], [], []
        for a in summands:
            hom_row, rad_row, sq_row, arrow_row = [], [], [], []
            for c in summands:
                size = self.hom_c_dim(a, c)
                radical = len(self.radical_basis(a, c))
                if a == c and (size < 1 or radical != size - 1):
                    self._fail(t, f"End_C({a.name}) has dimension {size}, radical {radical}")
                square = rank(self._span(a, c, summands, self.radical_basis), size) if size else 0
                if radical - square < 0:
                    self._fail(t, f"negative arrow count from {a.name} to {c.name}")
                hom_row.append(size)
                rad_row.append(radical)
                sq_row.append(square)
                arrow_row.append(radical - square)
            hom.append(tuple(hom_row))
            rad.append(tuple(rad_row))
            rad_sq.append(tuple(sq_row))
            arrows.append(tuple(arrow_row))
        data = EndoAlgebraData(
            object=t, hom_dims=tuple(hom), rad_dims=tuple(rad), rad_sq_dims=tuple(rad_sq), arrows=tuple(arrows)
        )
        self.logger.debug(f"End_C({t}) has dimension {data.total_dim}")
        return data

    def _through(self, M: DVertex) -> List[DVertex]:
        twists = [self.model.G_apply(M, s, checked=False) for s in range(-G_TWIST_RANGE, G_TWIST_RANGE + 1)]
        return [v for v in twists if self.model.in_window(v)]

    def _check_outer_twists(self, t: MRigidObject, M: DVertex, a: DVertex, b: DVertex):
        for s in (-G_TWIST_RANGE, G_TWIST_RANGE):
            w = self.model.G_apply(M, s, checked=False)
            for target in (b, self.twist(b)):
                if self.model.hom_unchecked(a, w) and self.model.hom_unchecked(w, target):
                    self._fail(t, f"maps through G^{s} {M.name} reach {target.name}")

    def factor_dims(self, t: MRigidObject, M: DVertex) -> Matrix:
        """
        dim Hom_C(T_a, T_b) modulo maps through add G^s M, for T_a, T_b != M,
        cross-checked against the span of compositions through M in C
        """
        if M not in t:
            self._fail(t, f"{M.name} is not a summand")
        others = [v for v in t.summands if v != M]
        through = self._through(M)
        rows = []
        for a in others:
            row = []
            for b in others:
                self._check_outer_twists(t, M, a, b)
                gb = self.twist(b)
                d0 = self.model.hom_unchecked(a, b) - self.mesh.factoring_dim(a, b, through)
                d1 = 0
                if self.model.hom_unchecked(a, gb):
                    self.model.check(gb)
                    d1 = self.model.hom_unchecked(a, gb) - self.mesh.factoring_dim(a, gb, through)
                size = self.hom_c_dim(a, b)
                ideal = rank(self._span(a, b, [M], self.hom_c_basis), size) if size else 0
                if size - ideal != d0 + d1:
                    self._fail(t, f"factoring through {M.name} from {a.name} to {b.name}: "
                                  f"{d0 + d1} in D, {size - ideal} in C")
                row.append(d0 + d1)
            rows.append(tuple(row))
        return tuple(rows)

    def quotient_arrows(self, t: MRigidObject, M: DVertex) -> Matrix:
        """Arrows of End_C(T)/(e_M): dim rad - dim(rad^2 + (e_M))"""
        others = [v for v in t.summands if v != M]
        rows = []
        for a in others:
            row = []
            for b in others:
                size = self.hom_c_dim(a, b)
                radical = len(self.radical_basis(a, b))
                vectors = self._span(a, b, t.summands, self.radical_basis) + self._span(a, b, [M], self.hom_c_basis)
                row.append(radical - (rank(vectors, size) if size else 0))
            rows.append(tuple(row))
        return tuple(rows)

    # ========== FACTOR THEOREM ==========

    def _localised_dims(self, localise: LocaliseService, images: Sequence[DObject], pd) -> Matrix:
        model = localise.model
        rows = []
        top = max((v.shift for y in images for v in y.distinct()), default=0)
        for y_a in images:
            row = []
            for y_b in images:
                value = model.hom_object(y_a, y_b)
                twisted = [model.G_apply(v, 1, checked=False) for v in y_b.vertices()]
                if all(model.in_window(v) for v in twisted):
                    value += model.hom_object(y_a, localise.project_to_D0(DObject.from_vertices(twisted), pd))
                elif any(v.shift <= top + 1 for v in twisted):
                    model.check(*twisted)
                row.append(value)
            rows.append(tuple(row))
        return tuple(rows)

    def verify_factor_theorem(self, t: MRigidObject, M: DVertex) -> FactorTheoremReport:
        """
        End_C(T)/(e_M) against End of the localised object over H'
        Args:
            t: Maximal m-rigid object named in D_G; normalized here when needed
            M: The summand to localise at
        Returns:
            FactorTheoremReport; report.passed tells whether the matrices
            and the arrow counts agree
        """
        normalized = self.context.service(SliceService).normalize_to_Dminus(t)
        target = ContextService().get_context(normalized.quiver, self.m, self.context.window)
        t0 = MRigidObject(tuple(normalized.positions[v] for v in t.summands), maximal=t.maximal)
        M0 = normalized.positions[M]
        endo = target.service(EndoService)
        localise = target.service(LocaliseService)
        factor = endo.factor_dims(t0, M0)
        quotient = endo.quotient_arrows(t0, M0)
        localised = localise.localise_object(t0, M0)
        pd = localised.perpendicular
        by_summand = dict(zip([v for v in t0.summands if v != M0], localised.image_in_D))
        images = [by_summand[v] for v in t0.summands if v != M0]
        localised_dims = self._localised_dims(localise, images, pd)
        h_object = MRigidObject(tuple(localise.to_h_prime(y.as_indecomposable(), pd) for y in images), True)
        h_endo = localise.h_prime_context(pd).service(EndoService).endo_dims(h_object)
        report = FactorTheoremReport(
            object=t, M=M,
            factor_dims=factor,
            localised_dims=localised_dims,
            h_prime_dims=h_endo.hom_dims,
            quotient_arrows=quotient,
            h_prime_arrows=h_endo.arrows,
        )
        if not report.passed:
            self.logger.error(f"Factor theorem fails for {t} at {M.name}")
        return report
