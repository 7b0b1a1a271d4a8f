from unittest.mock import patch

import pytest

from core.services import WorkerPoolService
from quivers.utils import QUIVER_PRESETS, UnknownVertexException


class TestKnitModuleCategory:
    """Test cases for KnittingService.knit_module_category."""

    # ========== SMALL CASES ==========

    def test_knit_a1(self, knit):
        """Test that A1 has one module, projective and injective, with no translate."""
        ar = knit('A1')

        assert len(ar) == 1
        vertex = ar.vertices[0]
        assert vertex.is_projective and vertex.is_injective
        assert ar.tau == {}
        assert ar.arrows == ()

    def test_knit_a2(self, a2_ar):
        """Test the AR quiver 01 -> 11 -> 10 of 1 -> 2."""
        assert [v.name for v in a2_ar.vertices] == ['01', '11', '10']
        assert [(s.name, t.name) for s, t in a2_ar.arrows] == [('01', '11'), ('11', '10')]

    def test_knit_a2_boundaries(self, a2_ar):
        """Test that 11 is P(1) and I(2) while 10 is I(1)."""
        assert a2_ar.projective('1').name == '11'
        assert a2_ar.projective('2').name == '01'
        assert a2_ar.injective('1').name == '10'
        assert a2_ar.injective('2').name == '11'

    def test_knit_a2_mesh(self, a2_ar):
        """Test the single mesh 01 -> 11 -> 10."""
        assert len(a2_ar.meshes) == 1
        mesh = a2_ar.meshes[0]
        assert (mesh.start.name, [v.name for v in mesh.middles], mesh.end.name) == ('01', ['11'], '10')

    def test_knit_a2_coordinates(self, a2_ar):
        """Test that (orbit, level) locates tau^{-level} P(orbit)."""
        assert a2_ar.at('2', 0).name == '01'
        assert a2_ar.at('1', 0).name == '11'
        assert a2_ar.at('2', 1).name == '10'
        assert a2_ar.at('1', 1) is None
        assert a2_ar.last_level('2') == 1

    # ========== COUNTING INVARIANTS ==========

    @pytest.mark.parametrize('name', sorted(QUIVER_PRESETS))
    def test_vertex_count_equals_roots(self, knit, quiver_service, name):
        """Test that the knitting finds one module per positive root."""
        ar = knit(name)
        roots = quiver_service.positive_roots(ar.quiver)

        assert sorted(str(v.dim) for v in ar.vertices) == sorted(str(root) for root in roots)

    @pytest.mark.parametrize('name', ['A4', 'D5', 'E6'])
    def test_boundary_counts(self, knit, name):
        """Test that there are n projectives and n injectives."""
        ar = knit(name)

        assert len(ar.projectives) == ar.quiver.n
        assert len(ar.injectives) == ar.quiver.n

    @pytest.mark.parametrize('name', ['A3', 'D4', 'E7'])
    def test_mesh_additivity(self, knit, name):
        """Test dim tau Z + dim Z = sum of the middles on every mesh."""
        ar = knit(name)
        for mesh in ar.meshes:
            middles = [sum(values) for values in zip(*(v.dim.values for v in mesh.middles))]
            ends = [a + b for a, b in zip(mesh.start.dim.values, mesh.end.dim.values)]
            assert middles == ends

    @pytest.mark.parametrize('name', ['A5', 'D6'])
    def test_arrows_follow_slice_order(self, knit, name):
        """Test that every arrow increases the slice index."""
        ar = knit(name)

        assert all(s.slice_index < t.slice_index for s, t in ar.arrows)
        assert [v.slice_index for v in ar.vertices] == list(range(len(ar)))

    def test_disjoint_union(self, quiver_service, knitting_service):
        """Test that a disconnected quiver knits component by component."""
        quiver = quiver_service.build_quiver(['1', '2', '3'], [('1', '2')], require_connected=False)

        ar = knitting_service.knit_module_category(quiver)

        assert len(ar) == 4
        assert ar.projective('3').is_injective


class TestTauModule:
    """Test cases for the module-level AR translate."""

    def test_tau_of_simple_injective(self, a2_ar):
        """Test tau(10) = 01."""
        assert a2_ar.tau_module(a2_ar.by_name('10')).name == '01'

    def test_tau_of_projective(self, a2_ar):
        """Test that projectives have no translate."""
        assert a2_ar.tau_module(a2_ar.by_name('11')) is None
        assert a2_ar.tau_module(a2_ar.by_name('01')) is None

    def test_tau_inverse(self, a2_ar):
        """Test tau^{-1}(01) = 10 and that injectives have no inverse translate."""
        assert a2_ar.tau_inverse_module(a2_ar.by_name('01')).name == '10'
        assert a2_ar.tau_inverse_module(a2_ar.by_name('10')) is None

    def test_tau_is_injective_on_non_projectives(self, knit):
        """Test that tau is a bijection from non-projectives to non-injectives in E6."""
        ar = knit('E6')
        images = [ar.tau_module(v) for v in ar.vertices if not v.is_projective]

        assert len(set(images)) == len(images)
        assert all(not image.is_injective for image in images)


class TestHammockService:
    """Test cases for Hom and Ext dimensions between modules."""

    def test_hom_a2(self, hammock):
        """Test the Hom dimensions along 01 -> 11 -> 10."""
        ar, service = hammock('A2')
        p2, p1, s1 = (ar.by_name(name) for name in ('01', '11', '10'))

        assert service.hom(p2, p1) == 1
        assert service.hom(p1, s1) == 1
        assert service.hom(p2, s1) == 0
        assert service.hom(s1, p2) == 0

    def test_ext_a2(self, hammock):
        """Test Ext^1(S1, P2) = 1 and Ext^1(P, -) = 0."""
        ar, service = hammock('A2')
        p2, p1, s1 = (ar.by_name(name) for name in ('01', '11', '10'))

        assert service.ext(s1, p2) == 1
        assert service.ext(p2, s1) == 0
        assert service.ext(p1, p2) == 0

    @pytest.mark.parametrize('name', ['A4', 'D4', 'E6'])
    def test_modules_are_bricks(self, hammock, name):
        """Test End(X) = k and Ext^1(X, X) = 0 for every indecomposable."""
        ar, service = hammock(name)
        for vertex in ar.vertices:
            assert service.hom(vertex, vertex) == 1
            assert service.ext(vertex, vertex) == 0

    @pytest.mark.parametrize('name', ['A3', 'D4', 'D5'])
    def test_euler_identity(self, hammock, quiver_service, name):
        """Test dim Hom - dim Ext^1 = <dim X, dim Y> for every pair."""
        ar, service = hammock(name)
        for x in ar.vertices:
            for y in ar.vertices:
                expected = quiver_service.euler_form(ar.quiver, x.dim, y.dim)
                assert service.hom(x, y) - service.ext(x, y) == expected

    def test_hom_from_projective_reads_dimension(self, hammock):
        """Test dim Hom(P(i), X) = dim X_i."""
        ar, service = hammock('D5')
        for label in ar.quiver.vertices:
            projective = ar.projective(label)
            for vertex in ar.vertices:
                assert service.hom(projective, vertex) == vertex.dim[label]

    def test_unknown_vertex(self, hammock, knit):
        """Test that a module of another AR quiver is rejected."""
        ar, service = hammock('A2')
        foreign = knit('A3').vertices[-1]

        with pytest.raises(UnknownVertexException):
            service.hom(foreign, ar.vertices[0])

    def test_parallel_lookups_build_one_table(self, hammock):
        """Test that lookups from one source on several threads share a single table."""
        ar, service = hammock('D4')
        source = ar.vertices[0]

        with patch.object(service, '_build_table', wraps=service._build_table) as build:
            dims = WorkerPoolService(4).map(lambda y: service.hom(source, y), list(ar.vertices) * 4)

        assert build.call_count == 1
        assert dims == [service.hom(source, y) for y in ar.vertices] * 4
