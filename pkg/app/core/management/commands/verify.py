from clusters.serializers import VerificationReportSerializer
from clusters.services import VerificationService
from clusters.utils import VERIFICATION_SUITES
from core.management.base import MClusterCommand
from core.utils.constants import EXIT_CODES

from django.core.management.base import CommandError


class Command(MClusterCommand):
    help = "Run the verification suites on a quiver"

    def add_leading_arguments(self, parser):
        parser.add_argument('suite', choices=['all'] + VERIFICATION_SUITES)

    def run(self, **options):
        service = VerificationService(self.context, self.options['max_cliques'], self.options['workers'])
        report = service.run([options['suite']])
        data = VerificationReportSerializer(report, context={'timings': options['timings']}).data
        lines = []
        for check in report.checks:
            timing = f" {check.elapsed:.2f}s" if options['timings'] else ''
            line = f"{check.status:<7} {check.name} ({check.checked}){timing}"
            lines.append(self.style.SUCCESS(line) if check.passed else self.style.ERROR(line))
            lines.extend(f"        {failure}" for failure in check.failures)
        lines.extend(f"{key}: {value}" for key, value in sorted(report.counts.items()))
        self.emit(options, data, lines)
        if report.capped:
            raise CommandError(f"Verification of {report.quiver} hit a resource cap",
                               returncode=EXIT_CODES['RESOURCE_CAP'])
        if not report.passed:
            self.check_failed(f"Verification of {report.quiver}, m={report.m} failed")
