from unittest.mock import patch

import networkx as nx
import pytest

from clusters.domain import MRigidObject
from clusters.services import ClusterService
from clusters.utils import CliqueCapExceeded, DomainMembershipException, RigidityException
from core.services import WorkerPoolService

GRID = [
    ('A1', 1), ('A1', 2), ('A1', 3),
    ('A2', 1), ('A2', 2), ('A2', 3),
    ('A3', 1), ('A3', 2), ('A3', 3),
    ('A4', 1), ('A4', 2), pytest.param('A4', 3, marks=pytest.mark.slow),
    ('D4', 1), pytest.param('D4', 2, marks=pytest.mark.slow),
]


class TestFundamentalDomain:
    """Test cases for ClusterService.fundamental_domain."""

    def test_a2_order(self, a2_cluster):
        """Test that the domain is listed slice first, then shift."""
        domain = a2_cluster.fundamental_domain()

        assert [v.name for v in domain] == ['01[0]', '01[1]', '11[0]', '11[1]', '10[0]']

    @pytest.mark.parametrize('name, m', [('A2', 2), ('A3', 2), ('D4', 1), ('E6', 1)])
    def test_size(self, cluster, context, name, m):
        """Test |D| = m |Phi+| + n."""
        ctx = context(name, m)

        assert len(cluster(name, m).fundamental_domain()) == m * len(ctx.ar) + ctx.n

    def test_index(self, a2_cluster):
        """Test that index follows the listing order."""
        domain = a2_cluster.fundamental_domain()

        assert [domain.index(v) for v in domain] == list(range(5))

    def test_parse_vertex_outside(self, a2_cluster):
        """Test that 10[1] is not in the domain for m = 1."""
        with pytest.raises(DomainMembershipException):
            a2_cluster.parse_vertex('10[1]')


class TestExtCluster:
    """Test cases for ClusterService.ext_cluster."""

    def test_example(self, a2_cluster):
        """Test Ext^1_C(10, 01) = 1."""
        x, y = a2_cluster.parse_vertex('10'), a2_cluster.parse_vertex('01')

        assert a2_cluster.ext_cluster(x, y, 1) == 1

    def test_hom(self, a2_cluster):
        """Test that k = 0 gives Hom_C."""
        x, y = a2_cluster.parse_vertex('01'), a2_cluster.parse_vertex('11')

        assert a2_cluster.ext_cluster(x, y, 0) == 1
        assert a2_cluster.ext_cluster(x, x, 0) == 1

    def test_all_indecomposables_rigid_for_m_one(self, cluster):
        """Test that every indecomposable of a cluster category is rigid."""
        graph = cluster('A3', 1).compatibility_graph()

        assert all(graph.self_rigid.values())


class TestCompatibilityGraph:
    """Test cases for ClusterService.compatibility_graph."""

    def test_pentagon(self, a2_cluster):
        """Test that A2, m = 1 gives the pentagon."""
        graph = a2_cluster.compatibility_graph()

        assert graph.edge_count() == 5
        assert all(degree == 2 for _, degree in graph.graph.degree())
        assert nx.is_connected(graph.graph)

    def test_node_attributes(self, a2_cluster):
        """Test that nodes carry their domain index and rigidity."""
        graph = a2_cluster.compatibility_graph()
        vertex = graph.nodes[2]

        assert graph.graph.nodes[vertex]['index'] == 2
        assert graph.graph.nodes[vertex]['self_rigid'] is True

    def test_a1_without_edges(self, cluster):
        """Test that A1, m = 2 has three isolated nodes."""
        graph = cluster('A1', 2).compatibility_graph()

        assert len(graph.nodes) == 3
        assert graph.edge_count() == 0

    def test_parallel_requests_share_one_graph(self, context):
        """Test that the graph and its domain are built once when requested from several threads."""
        service = ClusterService(context('A3', 2))

        with patch.object(service, '_build_graph', wraps=service._build_graph) as build:
            graphs = WorkerPoolService(4).map(lambda _: service.compatibility_graph(), range(8))

        assert build.call_count == 1
        assert all(graph is graphs[0] for graph in graphs)
        assert graphs[0].domain is service.fundamental_domain()


class TestEnumerate:
    """Test cases for ClusterService.enumerate_maximal_m_rigid."""

    # ========== SMALL CASES ==========

    def test_a2_objects(self, a2_cluster, names):
        """Test the five clusters of A2 in domain order."""
        objects = a2_cluster.enumerate_maximal_m_rigid()

        assert [names(t) for t in objects] == [
            ['01[0]', '11[0]'],
            ['01[0]', '11[1]'],
            ['01[1]', '11[1]'],
            ['01[1]', '10[0]'],
            ['11[0]', '10[0]'],
        ]
        assert all(t.maximal for t in objects)

    def test_a1_objects(self, cluster):
        """Test that A1 has m + 1 objects of one summand."""
        objects = cluster('A1', 2).enumerate_maximal_m_rigid()

        assert [len(t) for t in objects] == [1, 1, 1]

    # ========== COUNTS ==========

    @pytest.mark.parametrize('name, m', GRID)
    def test_fuss_catalan_counts(self, cluster, fuss_catalan, name, m):
        """Test that the number of maximal m-rigid objects is the Fuss-Catalan number."""
        objects = cluster(name, m).enumerate_maximal_m_rigid()

        assert len(objects) == fuss_catalan(name, m)

    @pytest.mark.parametrize('name, m, expected', [('A2', 1, 5), ('A2', 2, 12), ('A2', 3, 22), ('A3', 1, 14),
                                                   ('A3', 2, 55), ('D4', 1, 50)])
    def test_known_counts(self, cluster, name, m, expected):
        """Test the counts against fixed values."""
        assert len(cluster(name, m).enumerate_maximal_m_rigid()) == expected

    @pytest.mark.parametrize('name, m', [('A3', 2), ('D4', 1)])
    def test_every_object_has_n_summands(self, cluster, context, name, m):
        """Test that maximal m-rigid objects have exactly n summands."""
        n = context(name, m).n

        assert all(len(t) == n for t in cluster(name, m).enumerate_maximal_m_rigid())

    def test_cap(self, cluster):
        """Test that the clique cap raises a resource error."""
        with pytest.raises(CliqueCapExceeded):
            cluster('A3', 1).enumerate_maximal_m_rigid(max_cliques=3)


class TestParseObject:
    """Test cases for reading m-rigid objects."""

    def test_parse_maximal(self, obj, names):
        """Test that a cluster is read in domain order and marked maximal."""
        t = obj('11', '01')

        assert names(t) == ['01[0]', '11[0]']
        assert t.maximal

    def test_parse_partial(self, obj):
        """Test that a single summand is rigid but not maximal."""
        assert not obj('11').maximal

    def test_parse_not_rigid(self, obj):
        """Test that 10 and 01 have an extension."""
        with pytest.raises(RigidityException):
            obj('10', '01')

    def test_parse_repeated(self, obj):
        """Test that summands may not repeat."""
        with pytest.raises(RigidityException):
            obj('11', '11[0]')

    def test_parse_outside_domain(self, obj):
        """Test that names must lie in the fundamental domain."""
        with pytest.raises(DomainMembershipException):
            obj('11', '10[1]')

    @pytest.mark.parametrize('m', [2, 3])
    def test_indecomposables_are_m_rigid(self, cluster, m):
        """Test Ext^k_C(x, x) = 0 for k = 1..m on the whole domain of A3."""
        service = cluster('A3', m)
        for vertex in service.fundamental_domain():
            assert all(service.ext_cluster(vertex, vertex, k) == 0 for k in range(1, m + 1))
            assert service.parse_object([vertex.name]).summands == (vertex,)


class TestComplements:
    """Test cases for ClusterService.complements."""

    def test_a2_complements(self, a2_cluster, obj):
        """Test that {01} has the complements 11 and 11[1]."""
        partial = obj('01')

        complements = a2_cluster.complements(partial)

        assert [v.name for v in complements] == ['11[0]', '11[1]']

    @pytest.mark.parametrize('name, m', [('A2', 2), ('A3', 1), ('A3', 2), ('D4', 1)])
    def test_m_plus_one_complements(self, cluster, name, m):
        """Test that every almost complete object has exactly m + 1 complements."""
        service = cluster(name, m)
        for t in service.enumerate_maximal_m_rigid():
            for vertex in t.summands:
                assert len(service.complements(t.without(vertex))) == m + 1

    def test_wrong_size(self, a2_cluster, obj):
        """Test that complements need n - 1 summands."""
        with pytest.raises(RigidityException):
            a2_cluster.complements(obj('01', '11'))


class TestTilting:
    """Test cases for m-cluster tilting objects and tilting modules."""

    @pytest.mark.parametrize('name, m', [('A2', 2), ('A3', 1), ('A3', 2)])
    def test_maximal_objects_are_tilting(self, cluster, name, m):
        """Test that maximal m-rigid objects are m-cluster tilting and proper summands are not."""
        service = cluster(name, m)
        for t in service.enumerate_maximal_m_rigid():
            assert service.is_m_cluster_tilting(t)
            for vertex in t.summands:
                assert not service.is_m_cluster_tilting(t.without(vertex))

    def test_a2_tilting_modules(self, a2_cluster):
        """Test the two tilting modules of 1 -> 2."""
        modules = a2_cluster.tilting_modules()

        assert [[v.name for v in summands] for summands in modules] == [['01', '11'], ['11', '10']]

    @pytest.mark.parametrize('name, count', [('A1', 1), ('A3', 5), ('A4', 14)])
    def test_tilting_module_counts(self, cluster, name, count):
        """Test the Catalan counts of tilting modules over linear A_n."""
        assert len(cluster(name).tilting_modules()) == count

    @pytest.mark.parametrize('m', [1, 2, 3])
    def test_tilting_modules_are_maximal(self, cluster, m):
        """Test that tilting modules stay maximal m-rigid for every m."""
        service = cluster('A3', m)
        for summands in service.tilting_modules():
            assert service.embed_module(summands).maximal


class TestSourceSummand:
    """Test cases for ClusterService.source_summand."""

    def test_projective_source(self, a2_cluster, obj):
        """Test that P(1) is the source of {P(2), P(1)}."""
        assert a2_cluster.source_summand(obj('01', '11')).name == '11[0]'

    def test_top_degree_wins(self, a2_cluster, obj):
        """Test that the summand of highest degree is chosen."""
        assert a2_cluster.source_summand(obj('01', '11[1]')).name == '11[1]'

    def test_empty(self, a2_cluster):
        """Test that the zero object has no source."""
        assert a2_cluster.source_summand(MRigidObject(())) is None

    @pytest.mark.parametrize('name, m', [('A3', 2), ('D4', 1)])
    def test_every_object_has_a_source(self, cluster, name, m):
        """Test that a source summand exists for every maximal object."""
        service = cluster(name, m)

        assert all(service.source_summand(t) is not None for t in service.enumerate_maximal_m_rigid())
