from unittest.mock import patch

import pytest

from clusters.domain import CheckResult, VerificationReport
from clusters.serializers import CheckResultSerializer, VerificationReportSerializer
from clusters.services import ClusterService, VerificationService
from derived.services import DerivedModel
from quivers.services import QuiverService


@pytest.fixture
def verifier(context):
    """Factory fixture returning a VerificationService of a preset."""
    def _verifier(name, m=1, **kwargs):
        return VerificationService(context(name, m), **kwargs)
    return _verifier


class TestVerificationService:
    """Test cases for VerificationService.run."""

    # ========== FULL RUNS ==========

    def test_a2_all_suites(self, verifier):
        """Test that every suite passes for A2, m = 1, with the expected counts."""
        report = verifier('A2').run()

        assert report.passed, [check.failures for check in report.checks if check.failures]
        assert not report.capped
        assert report.counts == {
            'roots': 3,
            'domain': 5,
            'maximal_objects': 5,
            'size_2': 5,
            'complements_2': 10,
            'tilting_modules': 2,
            'localised_pairs': 10,
        }

    def test_check_order(self, verifier):
        """Test that checks are reported suite by suite in a fixed order."""
        report = verifier('A2').run()

        assert [check.name for check in report.checks] == [
            'derived.arrows', 'derived.mesh_bases', 'derived.bricks', 'derived.euler_form',
            'derived.serre_duality', 'derived.directedness', 'derived.orbit_terms', 'derived.calabi_yau',
            'cluster.enumerate', 'cluster.n_summands', 'cluster.complements', 'cluster.tilting_objects',
            'cluster.tilting_modules', 'cluster.source_summand', 'cluster.normalize',
            'localise.objects',
            'endo.algebras', 'endo.factor_theorem',
        ]
        assert all(check.elapsed is not None for check in report.checks)

    def test_single_suite_enumerates_first(self, verifier):
        """Test that localise alone runs its own enumeration check."""
        report = verifier('A2').run(['localise'])

        assert [check.name for check in report.checks] == ['localise.enumerate', 'localise.objects']
        assert report.counts['localised_pairs'] == 10
        assert report.passed

    def test_unknown_suites_are_ignored(self, verifier):
        """Test that only known suite names select checks."""
        report = verifier('A2').run(['derived', 'nothing'])

        assert {check.name.split('.')[0] for check in report.checks} == {'derived'}

    # ========== DERIVED SUITE ==========

    @pytest.mark.parametrize('name', ['A2', 'A3', 'D4'])
    @pytest.mark.parametrize('m', [1, 2, 3])
    def test_derived_grid(self, verifier, context, name, m):
        """Test that the derived checks pass and cover the whole window."""
        ctx = context(name, m)

        report = verifier(name, m).run(['derived'])

        assert report.passed, [check.failures for check in report.checks if check.failures]
        checked = {check.name: check.checked for check in report.checks}
        assert checked['derived.mesh_bases'] == len(ctx.model.vertices())
        assert checked['derived.serre_duality'] == len(ctx.model.vertices())
        assert checked['derived.bricks'] == len(ctx.model.vertices())
        assert checked['derived.euler_form'] == len(ctx.ar)
        assert checked['derived.orbit_terms'] == len(ctx.service(ClusterService).fundamental_domain())

    @patch.object(QuiverService, 'euler_form', return_value=0)
    def test_euler_form_mismatch(self, mock_euler_form, verifier):
        """Test that a wrong Euler form fails only the Euler form check."""
        report = verifier('A2').run(['derived'])

        failed = [check.name for check in report.checks if check.status == 'fail']
        assert failed == ['derived.euler_form']
        assert mock_euler_form.called

    @patch.object(DerivedModel, 'hom_unchecked', return_value=1)
    def test_cycle_of_maps(self, mock_hom, verifier):
        """Test that maps in both directions are reported as a cycle while bricks still pass."""
        report = verifier('A2').run(['derived'])

        statuses = {check.name: check.status for check in report.checks}
        directedness = next(check for check in report.checks if check.name == 'derived.directedness')
        assert statuses['derived.bricks'] == 'pass'
        assert statuses['derived.orbit_terms'] == 'fail'
        assert directedness.failures[0].startswith('cycle of maps')

    @pytest.mark.parametrize('name, m', [
        ('A1', 1), ('A1', 3), ('A2', 2), ('A3', 1), ('A3', 2), ('D4', 1),
        pytest.param('A4', 1, marks=pytest.mark.slow),
        pytest.param('A3', 3, marks=pytest.mark.slow),
    ])
    def test_grid(self, verifier, fuss_catalan, context, name, m):
        """Test the cluster suite over a grid of types."""
        report = verifier(name, m).run(['cluster'])

        assert report.passed
        assert report.counts['maximal_objects'] == fuss_catalan(name, m)
        assert report.counts[f"complements_{m + 1}"] == fuss_catalan(name, m) * context(name, m).n

    # ========== CAPS AND FAILURES ==========

    def test_capped(self, verifier):
        """Test that a clique cap marks the run capped and skips dependent checks."""
        report = verifier('A2', max_cliques=1).run()

        assert report.capped
        assert not report.passed
        assert 'maximal_objects' not in report.counts
        capped = [check.name for check in report.checks if check.status == 'capped']
        assert capped == ['cluster.enumerate', 'localise.enumerate', 'endo.enumerate']

    @patch.object(ClusterService, 'complements', return_value=[])
    def test_failed_check_is_reported(self, mock_complements, verifier):
        """Test that a wrong complement count fails only its own check."""
        report = verifier('A2').run(['cluster'])

        failed = [check for check in report.checks if check.status == 'fail']
        assert [check.name for check in failed] == ['cluster.complements']
        assert report.counts['complements_0'] == 10
        assert not report.passed
        assert mock_complements.called

    def test_workers_agree(self, verifier):
        """Test that a pool of workers gives the same report as a single worker."""
        serial = verifier('A3', workers=1).run(['cluster'])
        parallel = verifier('A3', workers=4).run(['cluster'])

        assert serial.counts == parallel.counts
        assert [c.status for c in serial.checks] == [c.status for c in parallel.checks]


class TestVerificationSerializers:
    """Test cases for the report serializers."""

    def test_report(self):
        """Test the JSON shape of a report."""
        report = VerificationReport(quiver='A2', m=1, counts={'roots': 3})
        report.checks.append(CheckResult('cluster.enumerate', 'pass', 5, [], 0.25))

        data = VerificationReportSerializer(report).data

        assert data['quiver'] == 'A2'
        assert data['passed'] is True
        assert data['capped'] is False
        assert data['counts'] == {'roots': 3}
        assert data['checks'][0] == {'name': 'cluster.enumerate', 'status': 'pass', 'checked': 5, 'failures': []}

    def test_timings(self):
        """Test that elapsed times are only written on request."""
        check = CheckResult('derived.arrows', 'fail', 2, ['broken'], 0.12345)

        data = CheckResultSerializer(check, context={'timings': True}).data

        assert data['elapsed'] == 0.123
        assert data['failures'] == ['broken']
