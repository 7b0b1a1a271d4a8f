from clusters.serializers import NormalizedObjectSerializer
from clusters.services import ClusterService, SliceService
from core.management.base import MClusterCommand


class Command(MClusterCommand):
    help = "Move a maximal m-rigid object into mod H0 v ... v (mod H0)[m-1] through a slice"

    def add_command_arguments(self, parser):
        parser.add_argument('--object', nargs='+', required=True, help='Summand names')

    def run(self, **options):
        t = self.context.service(ClusterService).parse_object(options['object'])
        normalized = self.context.service(SliceService).normalize_to_Dminus(t)
        heights = ', '.join(f"{v}:{h}" for v, h in normalized.slice_heights.items())
        lines = [
            f"slice {heights}",
            f"H0 = {normalized.quiver.label} with arrows {list(normalized.quiver.arrows)}",
        ] + [f"{v.name} -> {normalized.positions[v].name}" for v in t.summands]
        self.emit(options, NormalizedObjectSerializer(normalized).data, lines)
