import pytest

from core.services import ContextService
from derived.domain import DVertex
from quivers.services import QuiverService


@pytest.fixture
def context():
    """Factory fixture returning the cached context of a preset for a given m."""
    def _context(name, m=1):
        return ContextService().get_context(QuiverService().preset(name), m)
    return _context


@pytest.fixture
def a2_model(context):
    """Derived model of A2 (1 -> 2) for m = 1 on the default window."""
    return context('A2', 1).model


@pytest.fixture
def a2_mesh(context):
    """Mesh category of A2 for m = 1."""
    return context('A2', 1).mesh


@pytest.fixture
def vertex(a2_model):
    """Factory fixture reading an A2 object name such as '10[1]'."""
    def _vertex(name):
        return a2_model.parse_name(name)
    return _vertex


@pytest.fixture
def shifted():
    """Factory fixture building module[shift] from an AR quiver and a module name."""
    def _shifted(ar, name, shift=0):
        return DVertex(ar.by_name(name), shift)
    return _shifted
