from clusters.services import ClusterService
from clusters.utils import ERROR_MESSAGES, RigidityException
from core.management.base import MClusterCommand


class Command(MClusterCommand):
    help = "List the complements of an object after dropping one summand"

    def add_command_arguments(self, parser):
        parser.add_argument('--object', nargs='+', required=True, help='Summand names')
        parser.add_argument('--drop', required=True, help='Summand to remove')

    def run(self, **options):
        cluster = self.context.service(ClusterService)
        t = cluster.parse_object(options['object'])
        dropped = cluster.parse_vertex(options['drop'])
        if dropped not in t:
            raise RigidityException(ERROR_MESSAGES['NOT_A_SUMMAND'].format(vertex=dropped.name, object=str(t)))
        complements = cluster.complements(t.without(dropped))
        data = {
            'object': t.names,
            'dropped': dropped.name,
            'complements': [v.name for v in complements],
            'count': len(complements),
        }
        self.emit(options, data, [v.name for v in complements] + [f"{len(complements)} complements"])
