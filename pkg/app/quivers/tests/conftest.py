import pytest

from quivers.services import HammockService, KnittingService, QuiverService


@pytest.fixture
def quiver_service():
    """Fixture to create a QuiverService instance."""
    return QuiverService()


@pytest.fixture
def knitting_service():
    """Fixture to create a KnittingService instance."""
    return KnittingService()


@pytest.fixture
def a2(quiver_service):
    """Linear A2: 1 -> 2."""
    return quiver_service.preset('A2')


@pytest.fixture
def a2_ar(knitting_service, a2):
    """Knitted AR quiver of A2: 01 -> 11 -> 10."""
    return knitting_service.knit_module_category(a2)


@pytest.fixture
def knit(quiver_service, knitting_service):
    """Factory fixture knitting a preset by name."""
    def _knit(name):
        return knitting_service.knit_module_category(quiver_service.preset(name))
    return _knit


@pytest.fixture
def hammock(knit):
    """Factory fixture returning (ar, HammockService) for a preset."""
    def _hammock(name):
        ar = knit(name)
        return ar, HammockService(ar)
    return _hammock
