from clusters.serializers import MRigidObjectSerializer
from clusters.services import ClusterService
from core.management.base import MClusterCommand


class Command(MClusterCommand):
    help = "Enumerate the maximal m-rigid objects of C_m(H)"

    def run(self, **options):
        objects = self.context.service(ClusterService).enumerate_maximal_m_rigid(self.options['max_cliques'])
        data = {
            'quiver': self.context.quiver.label,
            'm': self.context.m,
            'count': len(objects),
            'objects': MRigidObjectSerializer(objects, many=True).data,
        }
        lines = [str(t) for t in objects] + [self.style.SUCCESS(f"{len(objects)} maximal {self.context.m}-rigid objects")]
        self.emit(options, data, lines)
