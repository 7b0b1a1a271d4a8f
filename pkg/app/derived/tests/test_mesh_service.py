from fractions import Fraction
from unittest.mock import patch

import pytest

from core.services import WorkerPoolService
from derived.domain import DObject, DVertex
from derived.services import MeshCategory
from derived.utils import EndpointMismatchException


class TestHomBasis:
    """Test cases for MeshCategory.hom_basis."""

    def test_identity_basis(self, vertex, a2_mesh):
        """Test that End(x) is spanned by the trivial path."""
        x = vertex('11')
        basis = a2_mesh.hom_basis(x, x)

        assert basis.paths == ((x,),)
        assert basis.dimension == 1

    def test_single_arrow(self, vertex, a2_mesh):
        """Test that Hom(01, 11) is spanned by the arrow."""
        basis = a2_mesh.hom_basis(vertex('01'), vertex('11'))

        assert basis.paths == ((vertex('01'), vertex('11')),)

    def test_mesh_kills_the_long_path(self, vertex, a2_mesh):
        """Test that 01 -> 11 -> 10 vanishes by the mesh relation."""
        assert a2_mesh.hom_basis(vertex('01'), vertex('10')).dimension == 0

    def test_crossing_degrees(self, vertex, a2_mesh):
        """Test that Hom(10, 01[1]) is spanned by 10 -> 01[1]."""
        basis = a2_mesh.hom_basis(vertex('10'), vertex('01[1]'))

        assert basis.paths == ((vertex('10'), vertex('01[1]')),)

    @pytest.mark.parametrize('name, m', [('A4', 1), ('D4', 1), ('D5', 2)])
    def test_dimensions_match_hammocks(self, context, name, m):
        """Test that the mesh bases have the hammock dimensions for every source in degree 0."""
        ctx = context(name, m)
        model, mesh = ctx.model, ctx.mesh
        for x in model.vertices():
            if x.shift != 0:
                continue
            for y in model.vertices():
                assert mesh.dim(x, y) == model.hom_unchecked(x, y)

    def test_two_dimensional_hom(self, context, shifted):
        """Test that Hom(P(2), 1211) is two-dimensional in D4 with two distinct paths."""
        ctx = context('D4')
        x, y = shifted(ctx.ar, '1111'), shifted(ctx.ar, '1211')
        basis = ctx.mesh.hom_basis(x, y)

        assert basis.dimension == 2
        assert basis.paths[0] != basis.paths[1]
        assert all(path[0] == x and path[-1] == y for path in basis.paths)

    def test_parallel_lookups_build_one_table(self, context, shifted):
        """Test that bases out of one source requested on several threads are built once."""
        ctx = context('D4')
        mesh = MeshCategory(ctx.model)
        x = shifted(ctx.ar, '1111')
        targets = [DVertex(module, 0) for module in ctx.ar.vertices] * 4

        with patch.object(mesh, '_build_table', wraps=mesh._build_table) as build:
            dims = WorkerPoolService(4).map(lambda y: mesh.dim(x, y), targets)

        assert build.call_count == 1
        assert dims == [ctx.model.hom_unchecked(x, y) for y in targets]


class TestCompose:
    """Test cases for MeshCategory.compose."""

    # ========== UNITS ==========

    def test_identity_on_the_left(self, vertex, a2_mesh):
        """Test compose(id, f) = f."""
        f = a2_mesh.basis_elements(vertex('01'), vertex('11'))[0]

        assert a2_mesh.compose(a2_mesh.identity(vertex('01')), f) == f

    def test_identity_on_the_right(self, vertex, a2_mesh):
        """Test compose(f, id) = f."""
        f = a2_mesh.basis_elements(vertex('11'), vertex('10'))[0]

        assert a2_mesh.compose(f, a2_mesh.identity(vertex('10'))) == f

    # ========== RELATIONS ==========

    def test_composition_of_the_two_arrows(self, vertex, a2_mesh):
        """Test that 01 -> 11 -> 10 composes to zero."""
        f = a2_mesh.basis_elements(vertex('01'), vertex('11'))[0]
        g = a2_mesh.basis_elements(vertex('11'), vertex('10'))[0]

        composed = a2_mesh.compose(f, g)

        assert composed.is_zero()
        assert composed.source == vertex('01') and composed.target == vertex('10')

    def test_nonzero_composition(self, context, shifted):
        """Test that P(3) -> P(2) -> P(1) is the nonzero map in A3."""
        ctx = context('A3')
        p3, p2, p1 = (shifted(ctx.ar, name) for name in ('001', '011', '111'))
        f = ctx.mesh.basis_elements(p3, p2)[0]
        g = ctx.mesh.basis_elements(p2, p1)[0]

        assert ctx.mesh.compose(f, g).coefficients == (Fraction(1),)

    def test_associativity(self, context, shifted):
        """Test (h g) f = h (g f) on basis elements out of P(2) in D4."""
        ctx = context('D4')
        mesh, model = ctx.mesh, ctx.model
        x = shifted(ctx.ar, '1111')
        modules = [DVertex(v, 0) for v in ctx.ar.vertices]
        for y in modules:
            for z in modules:
                for w in modules:
                    if not (mesh.dim(x, y) and mesh.dim(y, z) and mesh.dim(z, w)):
                        continue
                    for f in mesh.basis_elements(x, y):
                        for g in mesh.basis_elements(y, z):
                            for h in mesh.basis_elements(z, w):
                                left = mesh.compose(mesh.compose(f, g), h)
                                right = mesh.compose(f, mesh.compose(g, h))
                                assert left == right
        assert model.hom_derived(x, x) == 1

    def test_endpoint_mismatch(self, vertex, a2_mesh):
        """Test that maps must meet in the middle."""
        f = a2_mesh.basis_elements(vertex('01'), vertex('11'))[0]
        g = a2_mesh.basis_elements(vertex('01'), vertex('11'))[0]

        with pytest.raises(EndpointMismatchException):
            a2_mesh.compose(f, g)


class TestFactoringDim:
    """Test cases for MeshCategory.factoring_dim."""

    def test_identity_factors_through_itself(self, vertex, a2_mesh):
        """Test factoring_dim(x, x, {x}) = 1."""
        x = vertex('11')

        assert a2_mesh.factoring_dim(x, x, [x]) == 1

    def test_empty_class(self, vertex, a2_mesh):
        """Test that nothing factors through the empty class."""
        assert a2_mesh.factoring_dim(vertex('01'), vertex('11'), []) == 0

    def test_arrow_does_not_factor(self, vertex, a2_mesh):
        """Test that 01 -> 11 does not factor through 10."""
        x, z = vertex('01'), vertex('11')

        assert a2_mesh.dim(x, z) - a2_mesh.factoring_dim(x, z, [vertex('10')]) == 1

    def test_factoring_through_the_middle(self, context, shifted):
        """Test that Hom(P(3), P(1)) factors through P(2) in A3."""
        ctx = context('A3')
        p3, p2, p1 = (shifted(ctx.ar, name) for name in ('001', '011', '111'))

        assert ctx.mesh.factoring_dim(p3, p1, [p2]) == 1

    def test_vertices_outside_the_window_are_ignored(self, vertex, a2_mesh):
        """Test that class members beyond the window contribute nothing."""
        far = DVertex(vertex('11').module, 50)

        assert a2_mesh.factoring_dim(vertex('01'), vertex('11'), [far]) == 0


class TestApproximations:
    """Test cases for the minimal approximations."""

    def test_member_of_the_class(self, vertex, a2_mesh):
        """Test that x in cls is its own approximation with zero cone."""
        x = vertex('11')

        triangle = a2_mesh.minimal_right_approximation(x, [x, vertex('10')])

        assert triangle.approx_source == DObject.from_vertices([x])
        assert triangle.components == ((x, (Fraction(1),)),)
        assert triangle.cone.is_zero()

    def test_no_maps_from_the_class(self, vertex, a2_mesh):
        """Test that the approximation is zero when Hom(c, x) = 0 for all c."""
        x = vertex('01')

        triangle = a2_mesh.minimal_right_approximation(x, [vertex('10')])

        assert triangle.approx_source.is_zero()
        assert triangle.cone == DObject.from_vertices([x])

    def test_right_approximation_by_shifts(self, vertex, a2_model, a2_mesh):
        """Test that 11 -> 10 is the approximation of 10 by the shifts of 11."""
        cls = [DVertex(vertex('11').module, shift) for shift in a2_model.window.shifts()]

        triangle = a2_mesh.minimal_right_approximation(vertex('10'), cls)

        assert triangle.approx_source == DObject.from_vertices([vertex('11')])
        assert triangle.cone is None
        assert triangle.side == 'right'

    def test_left_approximation(self, vertex, a2_model, a2_mesh):
        """Test that 01 -> 11 is the left approximation of 01 by the shifts of 11."""
        cls = [DVertex(vertex('11').module, shift) for shift in a2_model.window.shifts()]

        triangle = a2_mesh.minimal_left_approximation(vertex('01'), cls)

        assert triangle.approx_source == DObject.from_vertices([vertex('11')])
        assert triangle.side == 'left'

    def test_multiplicity_is_the_top(self, context, shifted):
        """Test that 1211 in D4 needs P(2) twice."""
        ctx = context('D4')
        p = shifted(ctx.ar, '1111')

        triangle = ctx.mesh.minimal_right_approximation(shifted(ctx.ar, '1211'), [p])

        assert triangle.approx_source.multiplicity(p) == 2
        assert len(triangle.components) == 2

    def test_cone_callback(self, vertex, a2_mesh):
        """Test that the cone is delegated to the callback."""
        x = vertex('10')

        triangle = a2_mesh.minimal_right_approximation(
            x, [vertex('11')], cone=lambda v: DObject.from_vertices([v.shifted(1)])
        )

        assert triangle.cone == DObject.from_vertices([vertex('10[1]')])
