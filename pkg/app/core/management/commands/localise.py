from clusters.serializers import LocalisedObjectSerializer
from clusters.services import ClusterService, LocaliseService, SliceService
from clusters.utils import ERROR_MESSAGES, RigidityException
from core.management.base import MClusterCommand
from core.services.context_service import ContextService


class Command(MClusterCommand):
    help = "Localise a maximal m-rigid object at one of its summands"

    def add_command_arguments(self, parser):
        parser.add_argument('--object', nargs='+', required=True, help='Summand names')
        parser.add_argument('--at', required=True, help='The summand M')

    def run(self, **options):
        cluster = self.context.service(ClusterService)
        t = cluster.parse_object(options['object'])
        M = cluster.parse_vertex(options['at'])
        if M not in t:
            raise RigidityException(ERROR_MESSAGES['NOT_A_SUMMAND'].format(vertex=M.name, object=str(t)))
        normalized = self.context.service(SliceService).normalize_to_Dminus(t)
        target = ContextService().get_context(normalized.quiver, self.context.m, self.context.window)
        localise = target.service(LocaliseService)
        localised = localise.localise_object(normalized.object, normalized.positions[M])
        counts = localise.complement_counts(localised)
        serializer = LocalisedObjectSerializer(localised, context={'complement_counts': counts})
        lines = [
            f"H' = {localised.perpendicular.H_prime.label} with arrows {list(localised.perpendicular.H_prime.arrows)}",
            f"image {localised.image} ({'maximal' if localised.maximal else 'not maximal'})",
        ] + [f"without {N.name}: {count} complements over H, {h_count} over H'" for N, count, h_count in counts]
        self.emit(options, serializer.data, lines)
