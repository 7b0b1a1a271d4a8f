from clusters.serializers import EndoAlgebraDataSerializer, FactorTheoremReportSerializer
from clusters.services import ClusterService, EndoService
from clusters.utils import ERROR_MESSAGES, RigidityException
from core.management.base import MClusterCommand


class Command(MClusterCommand):
    help = "Endomorphism algebra of an m-rigid object, optionally modulo one summand"

    def add_command_arguments(self, parser):
        parser.add_argument('--object', nargs='+', required=True, help='Summand names')
        parser.add_argument('--factor-at', dest='factor_at', default=None, help='Summand M for End/(e_M)')

    def run(self, **options):
        cluster = self.context.service(ClusterService)
        endo = self.context.service(EndoService)
        t = cluster.parse_object(options['object'])
        data = {'algebra': EndoAlgebraDataSerializer(endo.endo_dims(t)).data}
        algebra = data['algebra']
        lines = [f"total dimension {algebra['total_dim']}", f"hom {algebra['hom_dims']}", f"arrows {algebra['arrows']}"]
        report = None
        if options['factor_at']:
            M = cluster.parse_vertex(options['factor_at'])
            if M not in t:
                raise RigidityException(ERROR_MESSAGES['NOT_A_SUMMAND'].format(vertex=M.name, object=str(t)))
            report = endo.verify_factor_theorem(t, M)
            data['factor'] = FactorTheoremReportSerializer(report).data
            lines += [
                f"factor {list(report.factor_dims)}",
                f"localised {list(report.localised_dims)}",
                f"over H' {list(report.h_prime_dims)}",
                f"arrows {list(report.quotient_arrows)} against {list(report.h_prime_arrows)}",
            ]
        self.emit(options, data, lines)
        if report is not None and not report.passed:
            self.check_failed(f"Factor algebra of {t} at {report.M.name} differs from the localised algebra")
