"""
This module contains the verification service, which runs the exhaustive
suites behind `verify`: the derived model, the cluster theorems, the
localisation sweep and the factor-algebra sweep.
"""

from collections import Counter
from itertools import combinations, permutations
from typing import Callable, Iterable, List, Optional, Sequence
import logging
import time

import networkx as nx

from core.services.context_service import ClusterContext, ContextService
from core.services.worker_service import WorkerPoolService
from core.utils.exceptions import MClusterException, ResourceCapException
from derived.domain import DObject, DVertex
from quivers.services import QuiverService

from ..domain import CheckResult, MRigidObject, VerificationReport
from ..utils.constants import CHECK_STATUS, LOGGING_CONFIG, VERIFICATION_SUITES
from .cluster_service import ClusterService
from .endo_service import EndoService
from .localise_service import LocaliseService
from .slice_service import SliceService

logger = logging.getLogger(LOGGING_CONFIG['VERIFICATION_LOGGER'])

Failures = List[str]


class VerificationService:
    def __init__(self, context: ClusterContext, max_cliques: Optional[int] = None, workers: Optional[int] = None):
        self.logger = logger
        self.context = context
        self.model = context.model
        self.m = context.m
        self.n = context.n
        self.max_cliques = max_cliques
        self.pool = WorkerPoolService(workers)
        self.cluster = context.service(ClusterService)
        self.quiver_service = QuiverService()
        self._objects: Optional[List[MRigidObject]] = None

    # ========== PLUMBING ==========

    def _run(self, report: VerificationReport, name: str, check: Callable[[], tuple]):
        started = time.perf_counter()
        try:
            checked, failures = check()
            status = CHECK_STATUS['PASS'] if not failures else CHECK_STATUS['FAIL']
        except ResourceCapException as e:
            self.logger.warning(f"Check {name} capped: {e}")
            checked, failures, status = 0, [str(e)], CHECK_STATUS['CAPPED']
        except MClusterException as e:
            self.logger.error(f"Check {name} aborted: {e}")
            checked, failures, status = 0, [str(e)], CHECK_STATUS['FAIL']
        result = CheckResult(name, status, checked, failures, time.perf_counter() - started)
        report.checks.append(result)
        self.logger.info(f"{name}: {status} ({checked} checked, {len(failures)} failures)")
        return result

    def _sweep(self, items: Sequence, function: Callable) -> tuple:
        """Apply function to every item on the pool, collecting failure lists"""
        def guarded(item) -> Failures:
            try:
                return function(item)
            except ResourceCapException:
                raise
            except MClusterException as e:
                return [str(e)]
        failures = [failure for result in self.pool.map(guarded, items) for failure in result]
        return len(items), failures

    def objects(self) -> List[MRigidObject]:
        if self._objects is None:
            self._objects = self.cluster.enumerate_maximal_m_rigid(self.max_cliques)
        return self._objects

    def run(self, suites: Iterable[str] = ('all',)) -> VerificationReport:
        """
        Run the requested suites in their fixed order
        Args:
            suites: Names from VERIFICATION_SUITES, or 'all'
        Returns:
            VerificationReport; counts are filled even when checks fail
        """
        suites = set(suites)
        selected = [s for s in VERIFICATION_SUITES if 'all' in suites or s in suites]
        report = VerificationReport(quiver=self.context.quiver.label, m=self.m)
        report.counts['roots'] = len(self.context.ar)
        report.counts['domain'] = len(self.cluster.fundamental_domain())
        for suite in selected:
            getattr(self, f"verify_{suite}")(report)
        self.logger.info(
            f"Verification of {report.quiver}, m={self.m}: {'pass' if report.passed else 'fail'}"
        )
        return report

    # ========== DERIVED ==========

    def verify_derived(self, report: VerificationReport):
        domain = list(self.cluster.fundamental_domain())
        window_vertices = self.model.vertices()
        modules = [v for v in window_vertices if v.shift == 0]
        self._run(report, 'derived.arrows', lambda: self._sweep(window_vertices, self._check_arrows))
        self._run(report, 'derived.mesh_bases', lambda: self._sweep(window_vertices, self._check_mesh_basis))
        self._run(report, 'derived.bricks', lambda: self._sweep(window_vertices, self._check_brick))
        self._run(report, 'derived.euler_form', lambda: self._sweep(modules, self._check_euler_form))
        self._run(report, 'derived.serre_duality', lambda: self._sweep(window_vertices, self._check_serre))
        self._run(report, 'derived.directedness', lambda: self._check_directedness(window_vertices))
        self._run(report, 'derived.orbit_terms', lambda: self._sweep(domain, self._check_orbit_terms))
        self._run(report, 'derived.calabi_yau', lambda: self._sweep(domain, self._check_calabi_yau))

    def _check_arrows(self, x: DVertex) -> Failures:
        failures = []
        for y in self.model.successors(x):
            if x not in self.model.predecessors(y):
                failures.append(f"arrow {x.name} -> {y.name} is not read back")
        tau = self.model.tau_derived(x, checked=False)
        if self.model.tau_inverse_derived(tau, checked=False) != x:
            failures.append(f"tau^-1 tau {x.name} != {x.name}")
        return failures

    def _check_mesh_basis(self, x: DVertex) -> Failures:
        """Building the bases out of x compares every dimension with the hammocks"""
        self.context.mesh.dim(x, x)
        return []

    def _check_brick(self, x: DVertex) -> Failures:
        if self.model.hom_unchecked(x, x) != 1:
            return [f"End({x.name}) has dimension {self.model.hom_unchecked(x, x)}"]
        return []

    def _check_euler_form(self, x: DVertex) -> Failures:
        """Hom(x, y) - Ext^1(x, y) = <dim x, dim y>"""
        failures = []
        for y in self.model.vertices():
            if y.shift != 0:
                continue
            difference = self.model.hom_unchecked(x, y) - self.model.hom_unchecked(x, y.shifted(1))
            expected = self.quiver_service.euler_form(self.context.quiver, x.module.dim, y.module.dim)
            if difference != expected:
                failures.append(f"Hom - Ext^1 = {difference} for {x.name}, {y.name}, Euler form gives {expected}")
        return failures

    def _check_serre(self, x: DVertex) -> Failures:
        """Hom(x, y) = Hom(y, tau x [1])"""
        serre = self.model.tau_derived(x, checked=False).shifted(1)
        failures = []
        for y in self.model.vertices():
            if self.model.hom_unchecked(x, y) != self.model.hom_unchecked(y, serre):
                failures.append(f"Serre duality fails for {x.name}, {y.name}")
        return failures

    def _check_directedness(self, vertices: List[DVertex]) -> tuple:
        """No cycle of nonzero maps between distinct indecomposables"""
        graph = nx.DiGraph()
        graph.add_nodes_from(vertices)
        for x, y in permutations(vertices, 2):
            if y.shift - x.shift in (0, 1) and self.model.hom_unchecked(x, y):
                graph.add_edge(x, y)
        if nx.is_directed_acyclic_graph(graph):
            return len(vertices), []
        cycle = nx.find_cycle(graph)
        return len(vertices), [f"cycle of maps {' -> '.join(x.name for x, _ in cycle)}"]

    def _check_orbit_terms(self, x: DVertex) -> Failures:
        """Hom(x, G^t y) vanishes off t in {0, 1}, and off one of them when m >= 2"""
        failures = []
        for y in self.cluster.fundamental_domain():
            terms = self.model.orbit_terms(x, y)
            stray = [t for t, value in terms.items() if value and t not in (0, 1)]
            if stray:
                failures.append(f"Hom({x.name}, G^t {y.name}) is nonzero for t = {stray}")
            elif self.m >= 2 and terms[0] and terms[1]:
                failures.append(f"Hom({x.name}, {y.name}) and Hom({x.name}, G {y.name}) are both nonzero")
        return failures

    def _check_calabi_yau(self, x: DVertex) -> Failures:
        failures = []
        for y in self.cluster.fundamental_domain():
            for k in range(1, self.m + 1):
                if self.cluster.ext_cluster(x, y, k) != self.cluster.ext_cluster(y, x, self.m + 1 - k):
                    failures.append(f"Ext^{k}({x.name}, {y.name}) breaks the (m+1)-Calabi-Yau symmetry")
        return failures

    # ========== CLUSTER ==========

    def verify_cluster(self, report: VerificationReport):
        result = self._run(report, 'cluster.enumerate', lambda: (len(self.objects()), []))
        if result.status == CHECK_STATUS['CAPPED']:
            return
        objects = self.objects()
        report.counts['maximal_objects'] = len(objects)
        for size, count in sorted(Counter(len(t) for t in objects).items()):
            report.counts[f"size_{size}"] = count
        self._run(report, 'cluster.n_summands', lambda: self._sweep(objects, self._check_size))
        self._run(report, 'cluster.complements', lambda: self._check_complements(report, objects))
        self._run(report, 'cluster.tilting_objects', lambda: self._sweep(objects, self._check_tilting))
        self._run(report, 'cluster.tilting_modules', lambda: self._check_tilting_modules(report))
        self._run(report, 'cluster.source_summand', lambda: self._sweep(objects, self._check_source))
        self._run(report, 'cluster.normalize', lambda: self._sweep(objects, self._check_normalize))

    def _check_size(self, t: MRigidObject) -> Failures:
        if len(t) != self.n or len(t) > (self.m + 1) * self.n:
            return [f"{t} has {len(t)} summands, expected {self.n}"]
        return []

    def _check_complements(self, report: VerificationReport, objects: List[MRigidObject]) -> tuple:
        def complements(t: MRigidObject) -> List[int]:
            return [len(self.cluster.complements(t.without(v))) for v in t.summands]
        histogram = Counter(count for counts in self.pool.map(complements, objects) for count in counts)
        for count, total in sorted(histogram.items()):
            report.counts[f"complements_{count}"] = total
        failures = [
            f"{total} almost complete objects have {count} complements, expected {self.m + 1}"
            for count, total in sorted(histogram.items()) if count != self.m + 1
        ]
        return sum(histogram.values()), failures

    def _check_tilting(self, t: MRigidObject) -> Failures:
        failures = []
        if not self.cluster.is_m_cluster_tilting(t):
            failures.append(f"{t} is maximal m-rigid but not m-cluster tilting")
        for v in t.summands:
            if self.cluster.is_m_cluster_tilting(t.without(v)):
                failures.append(f"{t.without(v)} is m-cluster tilting but not maximal")
        return failures

    def _check_tilting_modules(self, report: VerificationReport) -> tuple:
        modules = self.cluster.tilting_modules()
        report.counts['tilting_modules'] = len(modules)
        failures = []
        for summands in modules:
            embedded = self.cluster.embed_module(summands)
            if not embedded.maximal:
                failures.append(f"tilting module {embedded} is not maximal m-rigid")
        return len(modules), failures

    def _check_source(self, t: MRigidObject) -> Failures:
        if self.cluster.source_summand(t) is None:
            return [f"{t} has no source summand of top degree"]
        return []

    def _check_normalize(self, t: MRigidObject) -> Failures:
        normalized = self.context.service(SliceService).normalize_to_Dminus(t)
        target = ContextService().get_context(normalized.quiver, self.m, self.context.window)
        cluster = target.service(ClusterService)
        moved = normalized.object
        failures = []
        if len(moved) != len(t):
            failures.append(f"{t} lost summands under normalization")
        if any(not target.model.in_fundamental_domain_minus(v) for v in moved.summands):
            failures.append(f"{moved} is not in degrees 0..{self.m - 1} over {normalized.quiver.label}")
        graph = cluster.compatibility_graph()
        if not all(graph.adjacent(x, y) for x, y in combinations(moved.summands, 2)):
            failures.append(f"{moved} is not m-rigid over {normalized.quiver.label}")
        elif not cluster.is_maximal(moved.summands):
            failures.append(f"{moved} is not maximal over {normalized.quiver.label}")
        return failures

    # ========== LOCALISE ==========

    def _pairs(self) -> List[tuple]:
        return [(t, M) for t in self.objects() for M in t.summands]

    def verify_localise(self, report: VerificationReport):
        if self._objects is None and not self._guard(report, 'localise'):
            return
        pairs = self._pairs()
        report.counts['localised_pairs'] = len(pairs)
        self._run(report, 'localise.objects', lambda: self._sweep(pairs, self._check_localise))

    def _guard(self, report: VerificationReport, suite: str) -> bool:
        result = self._run(report, f"{suite}.enumerate", lambda: (len(self.objects()), []))
        return result.status != CHECK_STATUS['CAPPED']

    def _check_localise(self, pair: tuple) -> Failures:
        t, M = pair
        normalized = self.context.service(SliceService).normalize_to_Dminus(t)
        target = ContextService().get_context(normalized.quiver, self.m, self.context.window)
        localise = target.service(LocaliseService)
        M0 = normalized.positions[M]
        localised = localise.localise_object(normalized.object, M0)
        pd = localised.perpendicular
        failures = []
        for N, count, h_count in localise.complement_counts(localised):
            if count != self.m + 1 or h_count != self.m + 1:
                failures.append(f"{t} at {M.name} without {N.name}: {count} complements over H, {h_count} over H'")
        failures.extend(localise.tau_commutes(pd))
        for i in range(self.m + 1):
            killed = M0.shifted(i)
            if target.model.in_window(killed) and not localise.project_to_D0(killed, pd).is_zero():
                failures.append(f"L({killed.name}) is not zero")
        for y_object in localised.image_in_D:
            y = y_object.as_indecomposable()
            if localise.project_to_D0(y, pd) != DObject.from_vertices([y]):
                failures.append(f"L is not idempotent on {y.name}")
            for i in range(-1, self.m + 1):
                if target.model.in_window(M0.shifted(i)) and target.model.hom_unchecked(y, M0.shifted(i)):
                    localise.find_left_replacement(y, pd, i)
        return failures

    # ========== ENDO ==========

    def verify_endo(self, report: VerificationReport):
        if self._objects is None and not self._guard(report, 'endo'):
            return
        self._run(report, 'endo.algebras', lambda: self._sweep(self.objects(), self._check_endo))
        self._run(report, 'endo.factor_theorem', lambda: self._sweep(self._pairs(), self._check_factor))

    def _check_endo(self, t: MRigidObject) -> Failures:
        normalized = self.context.service(SliceService).normalize_to_Dminus(t)
        target = ContextService().get_context(normalized.quiver, self.m, self.context.window)
        data = target.service(EndoService).endo_dims(normalized.object)
        return [f"End_C({t}) has a diagonal entry other than 1"] if any(
            data.hom_dims[a][a] != 1 for a in range(len(t))
        ) else []

    def _check_factor(self, pair: tuple) -> Failures:
        t, M = pair
        report = self.context.service(EndoService).verify_factor_theorem(t, M)
        if report.passed:
            return []
        return [
            f"{t} at {M.name}: factor {report.factor_dims}, localised {report.localised_dims}, "
            f"H' {report.h_prime_dims}, arrows {report.quotient_arrows} against {report.h_prime_arrows}"
        ]
