from fractions import Fraction

import pytest

from clusters.domain import MRigidObject
from clusters.services import ClusterService, EndoService, LocaliseService, SliceService
from core.services import ContextService
from quivers.services import QuiverService
from quivers.utils import COXETER_NUMBERS

# Exponents of the Weyl groups, used for the Fuss-Catalan counts
EXPONENTS = {
    'A': lambda n: list(range(1, n + 1)),
    'D': lambda n: list(range(1, 2 * n - 2, 2)) + [n - 1],
    'E6': lambda n: [1, 4, 5, 7, 8, 11],
}


@pytest.fixture
def context():
    """Factory fixture returning the cached context of a preset for a given m."""
    def _context(name, m=1):
        return ContextService().get_context(QuiverService().preset(name), m)
    return _context


@pytest.fixture
def cluster(context):
    """Factory fixture returning the ClusterService of a preset."""
    def _cluster(name, m=1):
        return context(name, m).service(ClusterService)
    return _cluster


@pytest.fixture
def a2_cluster(cluster):
    """ClusterService of A2 (1 -> 2) for m = 1."""
    return cluster('A2', 1)


@pytest.fixture
def a2_slices(context):
    """SliceService of A2 for m = 1."""
    return context('A2', 1).service(SliceService)


@pytest.fixture
def a2_localise(context):
    """LocaliseService of A2 for m = 1."""
    return context('A2', 1).service(LocaliseService)


@pytest.fixture
def a2_endo(context):
    """EndoService of A2 for m = 1."""
    return context('A2', 1).service(EndoService)


@pytest.fixture
def obj(a2_cluster):
    """Factory fixture reading an m-rigid object of A2, m = 1, from summand names."""
    def _obj(*names):
        return a2_cluster.parse_object(names)
    return _obj


@pytest.fixture
def fuss_catalan():
    """Factory fixture for prod (m h + e_i + 1) / (e_i + 1)."""
    def _fuss_catalan(name, m):
        family, n = (name, int(name[1:])) if name.startswith('E') else (name[0], int(name[1:]))
        h = COXETER_NUMBERS[family](n) if callable(COXETER_NUMBERS[family]) else COXETER_NUMBERS[family]
        value = Fraction(1)
        for e in EXPONENTS[family](n):
            value *= Fraction(m * h + e + 1, e + 1)
        assert value.denominator == 1
        return int(value)
    return _fuss_catalan


@pytest.fixture
def names():
    """Summand names of an m-rigid object."""
    def _names(t: MRigidObject):
        return [v.name for v in t.summands]
    return _names
