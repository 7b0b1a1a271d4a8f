from itertools import combinations, islice

import pytest

from clusters.services import ClusterService, SliceService
from clusters.utils import NormalizationException
from core.services import ContextService


class TestSlices:
    """Test cases for SliceService.slices and slice_quiver."""

    def test_identity_first(self, a2_slices):
        """Test that the zero slice is tried first."""
        first = next(iter(a2_slices.slices(3)))

        assert first == {'1': 0, '2': 0}

    def test_slice_condition(self, context):
        """Test p(j) - p(i) in {0, 1} along every arrow of D4."""
        service = context('D4').service(SliceService)
        quiver = service.quiver
        for heights in islice(service.slices(2), 200):
            assert all(heights[j] - heights[i] in (0, 1) for i, j in quiver.arrows)

    def test_slice_count(self, a2_slices):
        """Test that each root height gives 2^(n-1) slices on a tree."""
        assert len(list(a2_slices.slices(1))) == 3 * 2

    def test_identity_slice_quiver(self, a2_slices):
        """Test that the zero slice keeps the orientation."""
        quiver = a2_slices.slice_quiver({'1': 0, '2': 0})

        assert quiver == a2_slices.quiver

    def test_reflected_slice_quiver(self, a2_slices):
        """Test that a step along 1 -> 2 reverses the arrow."""
        quiver = a2_slices.slice_quiver({'1': 0, '2': 1})

        assert quiver.arrows == (('2', '1'),)

    def test_slice_quivers_are_cached(self, a2_slices):
        """Test that equal orientations share one quiver object."""
        first = a2_slices.slice_quiver({'1': 3, '2': 4})
        second = a2_slices.slice_quiver({'1': -1, '2': 0})

        assert first is second


class TestNormalize:
    """Test cases for SliceService.normalize_to_Dminus."""

    # ========== EXAMPLES ==========

    def test_already_in_degree_zero(self, a2_slices, obj):
        """Test that objects of mod H come back unchanged."""
        t = obj('01', '11')

        normalized = a2_slices.normalize_to_Dminus(t)

        assert normalized.is_identity
        assert normalized.object == t
        assert normalized.quiver == a2_slices.quiver

    def test_shifted_projective(self, a2_slices, obj, names):
        """Test that {01, 11[1]} becomes the tilting module {11, 10}."""
        t = obj('01', '11[1]')

        normalized = a2_slices.normalize_to_Dminus(t)

        assert normalized.slice_heights == {'1': -1, '2': -1}
        assert normalized.quiver.arrows == (('1', '2'),)
        assert not normalized.is_identity
        assert {v.name: w.name for v, w in normalized.positions.items()} == {'01[0]': '10[0]', '11[1]': '11[0]'}
        assert names(normalized.object) == ['11[0]', '10[0]']

    def test_result_is_a_tilting_module(self, context, a2_slices, obj):
        """Test that the normalized object is a tilting module over H0."""
        normalized = a2_slices.normalize_to_Dminus(obj('01[1]', '10'))
        target = ContextService().get_context(normalized.quiver, 1, context('A2').window)
        modules = [tuple(v.module for v in normalized.object.summands)]

        assert modules[0] in target.service(ClusterService).tilting_modules()

    # ========== SWEEPS ==========

    @pytest.mark.parametrize('name, m', [('A2', 2), ('A3', 1), ('A3', 2), ('D4', 1)])
    def test_every_object_normalizes(self, context, cluster, name, m):
        """Test that every maximal object lands in degrees 0..m-1 and stays maximal m-rigid."""
        ctx = context(name, m)
        slices = ctx.service(SliceService)
        for t in cluster(name, m).enumerate_maximal_m_rigid():
            normalized = slices.normalize_to_Dminus(t)
            target = ContextService().get_context(normalized.quiver, m, ctx.window)
            moved = normalized.object
            graph = target.service(ClusterService).compatibility_graph()
            assert len(moved) == len(t)
            assert all(target.model.in_fundamental_domain_minus(v) for v in moved.summands)
            assert all(graph.adjacent(x, y) for x, y in combinations(moved.summands, 2))
            assert target.service(ClusterService).is_maximal(moved.summands)

    def test_ext_is_preserved(self, context, cluster):
        """Test that repositioning keeps every Ext^k_C between summands."""
        ctx = context('A3', 2)
        slices = ctx.service(SliceService)
        for t in cluster('A3', 2).enumerate_maximal_m_rigid()[:20]:
            normalized = slices.normalize_to_Dminus(t)
            target = ContextService().get_context(normalized.quiver, 2, ctx.window)
            for x in t.summands:
                for y in t.summands:
                    for k in range(3):
                        moved_x, moved_y = normalized.positions[x], normalized.positions[y]
                        assert ctx.model.hom_orbit(x, y, k) == target.model.hom_orbit(moved_x, moved_y, k)

    def test_no_slice(self, a2_slices, obj, monkeypatch):
        """Test that an exhausted search is a resource error."""
        monkeypatch.setattr(SliceService, '_reach', lambda self: 0)

        with pytest.raises(NormalizationException):
            a2_slices.normalize_to_Dminus(obj('01', '11[1]'))
