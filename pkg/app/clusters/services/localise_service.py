"""
This module contains the localisation service: the perpendicular category
of a rigid indecomposable M = X[d], the projection L_M onto
D0 = {U : Hom(M[i], U) = 0 for all i} and the image of an m-rigid object
in the m-cluster category of the perpendicular algebra H'.
"""

from typing import Callable, Dict, List, Tuple, Union
import logging
import threading

from core.services.context_service import ClusterContext, ContextService
from core.utils.exceptions import MClusterException
from core.utils.linalg import solve_unitriangular
from derived.domain import ApproxTriangle, DObject, DVertex
from derived.utils.exceptions import ApproximationException
from quivers.domain import ARVertex, DimVector
from quivers.services import QuiverService

from ..domain import LocalisedObject, MRigidObject, PerpendicularData
from ..utils.constants import ERROR_MESSAGES
from ..utils.exceptions import LocalisationException, PerpendicularException, ProjectionException
from ..utils.validators import MRigidObjectValidator
from .cluster_service import ClusterService

logger = logging.getLogger(__name__)


class LocaliseService:
    def __init__(self, context: ClusterContext):
        self.logger = logger
        self.context = context
        self.model = context.model
        self.mesh = context.mesh
        self.m = context.m
        self.context_service = ContextService()
        self._perpendicular: Dict[DVertex, PerpendicularData] = {}
        self._projections: Dict[Tuple[DObject, DVertex], DObject] = {}
        self._replacements: Dict[Tuple[DVertex, DVertex, int], List[DVertex]] = {}
        self._lock = threading.RLock()

    def _memoized(self, store: Dict, key, build: Callable):
        value = store.get(key)
        if value is None:
            with self._lock:
                value = store.get(key)
                if value is None:
                    value = build()
                    store[key] = value
        return value

    # ========== PERPENDICULAR CATEGORY ==========

    def is_in_D0(self, u: DVertex, M: DVertex) -> bool:
        """Hom(M[i], u) vanishes for every shift; only the two degrees below u can map to it"""
        self.model.check(u, M)
        for offset in (u.shift - M.shift - 1, u.shift - M.shift):
            if self.model.hom_unchecked(M.shifted(offset), u):
                return False
        return True

    def _fail(self, M: DVertex, detail: str):
        self.logger.error(f"Perpendicular category of {M.name}: {detail}")
        raise PerpendicularException(ERROR_MESSAGES['PERPENDICULAR'].format(vertex=M.name, detail=detail))

    def perpendicular_algebra(self, M: DVertex) -> PerpendicularData:
        """
        U_X and the hereditary algebra H' with mod H' equivalent to it
        Args:
            M: Rigid indecomposable of degree 0..m-1
        Returns:
            PerpendicularData, cached per M
        Raises:
            LocalisationException: M outside degrees 0..m-1
            PerpendicularException: U_X does not have n-1 Ext-projectives, or
                the identification with mod H' fails
        """
        if not self.model.in_fundamental_domain_minus(M):
            raise LocalisationException(ERROR_MESSAGES['PRECONDITION'].format(
                vertex=M.name, detail=f"degree must lie in 0..{self.m - 1}"
            ))
        return self._memoized(self._perpendicular, M, lambda: self._build_perpendicular(M))

    def _build_perpendicular(self, M: DVertex) -> PerpendicularData:
        hammock = self.model.hammock
        X = M.module
        if hammock.ext(X, X):
            self._fail(M, 'base module has self-extensions')
        members = [u for u in self.context.ar.vertices if hammock.hom(X, u) == 0 and hammock.ext(X, u) == 0]
        projectives = [p for p in members if all(hammock.ext(p, y) == 0 for y in members)]
        if len(projectives) != self.context.n - 1:
            self._fail(M, f"{len(projectives)} Ext-projectives, expected {self.context.n - 1}")
        labels = {p: str(index + 1) for index, p in enumerate(projectives)}
        arrows = []
        for a in projectives:
            for b in projectives:
                if a == b or hammock.hom(a, b) == 0:
                    continue
                others = [DVertex(c, 0) for c in projectives if c not in (a, b)]
                irreducible = hammock.hom(a, b) - self.mesh.factoring_dim(DVertex(a, 0), DVertex(b, 0), others)
                arrows.extend([(labels[b], labels[a])] * irreducible)
        h_prime = QuiverService().build_quiver(
            [labels[p] for p in projectives], arrows,
            name=f"{self.context.quiver.label}/{X.name}", require_connected=False,
        )
        h_ar = self.context_service.get_context(h_prime, self.m, self.context.window).ar
        by_label = {label: p for p, label in labels.items()}
        modules = {}
        for u in members:
            dim = DimVector(h_prime.vertices, tuple(hammock.hom(by_label[a], u) for a in h_prime.vertices))
            image = h_ar.by_dim(dim)
            if image is None:
                self._fail(M, f"{u.name} has fingerprint {dim}, not an indecomposable over H'")
            modules[u] = image
        if len(set(modules.values())) != len(members) or len(members) != len(h_ar):
            self._fail(M, f"{len(members)} perpendicular modules against {len(h_ar)} over H'")
        for p, label in labels.items():
            if modules[p] != h_ar.projective(label):
                self._fail(M, f"{p.name} does not go to the projective P'({label})")
        data = PerpendicularData(
            M=M,
            base_module=X,
            U_members=tuple(members),
            projectives_of_U=tuple(projectives),
            H_prime=h_prime,
            h_prime_modules=modules,
            D0_members=frozenset(DVertex(u, i) for u in members for i in self.context.window.shifts()),
        )
        self.logger.debug(f"Perpendicular category of {M.name}: {len(members)} modules, H' = {h_prime.label}")
        return data

    def h_prime_context(self, pd: PerpendicularData) -> ClusterContext:
        return self.context_service.get_context(pd.H_prime, self.m, self.context.window)

    def to_h_prime(self, vertex: DVertex, pd: PerpendicularData) -> DVertex:
        """U[i] in D0 as the H'-module U[i]"""
        return DVertex(pd.h_prime_modules[vertex.module], vertex.shift)

    def from_h_prime(self, vertex: DVertex, pd: PerpendicularData) -> DVertex:
        inverse = {image: module for module, image in pd.h_prime_modules.items()}
        return DVertex(inverse[vertex.module], vertex.shift)

    # ========== PROJECTION ==========

    def project_to_D0(self, w: Union[DObject, DVertex], pd: PerpendicularData) -> DObject:
        """
        L_M(w): the object R of add D0 with Hom(R, V) = Hom(w, V) for all V in D0
        Args:
            w: Object inside the window
            pd: Perpendicular data of M
        Returns:
            R as a DObject over D0 members
        Raises:
            ProjectionException: The fingerprint system has no non-negative
                integral solution inside the window
        """
        if isinstance(w, DVertex):
            w = DObject.from_vertices([w])
        if w.is_zero():
            return DObject()
        return self._memoized(self._projections, (w, pd.M), lambda: self._solve_projection(w, pd))

    def _solve_projection(self, w: DObject, pd: PerpendicularData) -> DObject:
        self.model.check(*w.distinct())
        window = self.context.window
        shifts = [v.shift for v in w.distinct()]
        low, high = max(min(shifts) - 1, window.low), min(max(shifts) + 1, window.high)
        candidates = sorted(
            (DVertex(u, i) for i in range(low, high + 1) for u in pd.U_members), key=lambda v: v.sort_key
        )
        upper = [[self.model.hom_unchecked(a, b) for b in candidates] for a in candidates]
        rhs = [self.model.hom_object(w, DObject.from_vertices([v])) for v in candidates]
        try:
            solution = solve_unitriangular(upper, rhs)
        except ValueError as e:
            raise ProjectionException(ERROR_MESSAGES['PROJECTION'].format(object=str(w), detail=str(e)))
        if any(value < 0 or value.denominator != 1 for value in solution):
            raise ProjectionException(ERROR_MESSAGES['PROJECTION'].format(
                object=str(w), detail='negative or fractional multiplicity'
            ))
        result = DObject.from_multiplicities(
            (v, int(value)) for v, value in zip(candidates, solution) if value
        )
        for v in pd.D0_members:
            target = DObject.from_vertices([v])
            if self.model.hom_object(result, target) != self.model.hom_object(w, target):
                raise ProjectionException(ERROR_MESSAGES['PROJECTION'].format(
                    object=str(w), detail=f"fingerprint differs at {v.name}"
                ))
        return result

    # ========== APPROXIMATION ==========

    def approximation_triangle(self, x: DVertex, pd: PerpendicularData) -> ApproxTriangle:
        """
        M_x -> x -> L_M(x) with M_x the minimal right approximation by
        M, M[1], ..., M[m]
        """
        M = pd.M
        cls = [DVertex(M.module, shift) for shift in range(self.m + 1) if shift in self.context.window]
        triangle = self.mesh.minimal_right_approximation(
            x, cls, cone=lambda v: self.project_to_D0(v, pd)
        )
        cone = triangle.cone
        detail = None
        if any(not pd.in_D0(v) for v in cone.distinct()):
            detail = 'cone leaves D0'
        elif self.model.k0_class(x) != tuple(
            a + b for a, b in zip(self.model.k0_class(triangle.approx_source), self.model.k0_class(cone))
        ):
            detail = 'Grothendieck classes are not additive'
        else:
            span = self.context.window.high - self.context.window.low
            for a in triangle.approx_source.distinct():
                if any(self.model.hom_unchecked(x, a.shifted(t)) for t in range(1, span + 1)):
                    detail = f"Hom({x.name}, {a.name}[t]) is nonzero for some t >= 1"
                    break
        if detail is not None:
            self.logger.error(f"Approximation triangle of {x.name} at {M.name}: {detail}")
            raise ApproximationException(ERROR_MESSAGES['LOCALISATION'].format(
                object=x.name, vertex=M.name, detail=detail
            ))
        return triangle

    def find_left_replacement(self, y: DVertex, pd: PerpendicularData, i: int) -> List[DVertex]:
        """
        Every window indecomposable x outside D0 with L_M(x) = y,
        Hom(x, M[t]) = 0 for all t and Hom(M, x[t]) = 0 for t != 1 - i
        """
        M = pd.M
        if not pd.in_D0(y):
            raise LocalisationException(ERROR_MESSAGES['PRECONDITION'].format(
                vertex=y.name, detail='not in D0'
            ))
        if self.model.hom_unchecked(y, M.shifted(i)) == 0:
            raise LocalisationException(ERROR_MESSAGES['PRECONDITION'].format(
                vertex=y.name, detail=f"Hom({y.name}, {M.name}[{i}]) = 0"
            ))
        return self._memoized(self._replacements, (M, y, i), lambda: self._search_replacements(y, pd, i))

    def _search_replacements(self, y: DVertex, pd: PerpendicularData, i: int) -> List[DVertex]:
        M = pd.M
        window = self.context.window
        span = range(window.low - window.high, window.high - window.low + 1)
        target = DObject.from_vertices([y])
        found = []
        for x in self.model.vertices():
            if pd.in_D0(x):
                continue
            if any(self.model.hom_unchecked(x, M.shifted(t)) for t in span):
                continue
            if any(self.model.hom_unchecked(M, x.shifted(t)) for t in span if t != 1 - i):
                continue
            try:
                image = self.project_to_D0(x, pd)
            except ProjectionException:
                self.logger.debug(f"Skipping {x.name}: projection leaves the window")
                continue
            if image == target:
                found.append(x)
        if not found:
            raise ProjectionException(ERROR_MESSAGES['NO_REPLACEMENT'].format(vertex=y.name))
        return found

    # ========== LOCALISATION ==========

    def _localisation_error(self, t: MRigidObject, M: DVertex, detail: str):
        self.logger.error(f"Localising {t} at {M.name}: {detail}")
        raise LocalisationException(ERROR_MESSAGES['LOCALISATION'].format(
            object=str(t), vertex=M.name, detail=detail
        ))

    def localise_object(self, t: MRigidObject, M: DVertex) -> LocalisedObject:
        """
        Image of T/M in C_m(H')
        Args:
            t: Maximal m-rigid object with every summand in degrees 0..m-1
            M: The summand to localise at
        Returns:
            LocalisedObject with the images in D and as H'-objects
        Raises:
            LocalisationException: A precondition or postcondition fails
        """
        if M not in t:
            raise LocalisationException(ERROR_MESSAGES['NOT_A_SUMMAND'].format(vertex=M.name, object=str(t)))
        if not all(self.model.in_fundamental_domain_minus(v) for v in t.summands):
            self._localisation_error(t, M, f"summands must lie in degrees 0..{self.m - 1}; normalize first")
        pd = self.perpendicular_algebra(M)
        h_cluster = self.h_prime_context(pd).service(ClusterService)
        domain = h_cluster.fundamental_domain()
        images_in_D = []
        images = []
        for x in t.summands:
            if x == M:
                continue
            cone = self.approximation_triangle(x, pd).cone
            y = cone.as_indecomposable()
            if y is None:
                self._localisation_error(t, M, f"image {cone} of {x.name} is not indecomposable")
            images_in_D.append(cone)
            images.append(self.to_h_prime(y, pd))
        if len(set(images)) != len(images) or len(images) != self.context.n - 1:
            self._localisation_error(t, M, f"{len(set(images))} distinct images, expected {self.context.n - 1}")
        for vertex in images:
            if vertex not in domain:
                self._localisation_error(t, M, f"{vertex.name} is outside the fundamental domain over H'")
        try:
            summands = MRigidObjectValidator(h_cluster.compatibility_graph()).validate(images)
        except MClusterException as e:
            self._localisation_error(t, M, str(e))
        image = MRigidObject(tuple(summands))
        maximal = h_cluster.is_maximal(image.summands)
        if not maximal:
            self._localisation_error(t, M, f"{image} is not maximal over H'")
        return LocalisedObject(
            object=t, M=M, perpendicular=pd, image_in_D=tuple(images_in_D),
            image=MRigidObject(image.summands, maximal=True), maximal=maximal,
        )

    def complement_counts(self, localised: LocalisedObject) -> List[Tuple[DVertex, int, int]]:
        """
        For every other summand N: complements of T/N over H and of the
        image of T/(M + N) over H'
        """
        t, M, pd = localised.object, localised.M, localised.perpendicular
        cluster = self.context.service(ClusterService)
        h_cluster = self.h_prime_context(pd).service(ClusterService)
        others = [v for v in t.summands if v != M]
        counts = []
        for N, image_of_N in zip(others, localised.image_in_D):
            count = len(cluster.complements(t.without(N)))
            dropped = self.to_h_prime(image_of_N.as_indecomposable(), pd)
            h_count = len(h_cluster.complements(localised.image.without(dropped)))
            counts.append((N, count, h_count))
        return counts

    def tau_commutes(self, pd: PerpendicularData) -> List[str]:
        """L_M(tau^{-1} x) against tau'^{-1} inside H' for x in D0 of degrees 0..m-1"""
        h_model = self.h_prime_context(pd).model
        failures = []
        for shift in range(self.m):
            for u in pd.U_members:
                x = DVertex(u, shift)
                moved = self.model.tau_inverse_derived(x, checked=False)
                if not self.model.in_window(moved):
                    continue
                image = self.project_to_D0(moved, pd)
                expected = h_model.tau_inverse_derived(self.to_h_prime(x, pd), checked=False)
                if image != DObject.from_vertices([self.from_h_prime(expected, pd)]):
                    failures.append(f"L(tau^-1 {x.name}) = {image}, expected {expected.name} over H'")
        return failures
