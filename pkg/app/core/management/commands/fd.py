from clusters.serializers import FundamentalDomainSerializer
from clusters.services import ClusterService
from core.management.base import MClusterCommand


class Command(MClusterCommand):
    help = "List the fundamental domain mod H v ... v (mod H)[m-1] v H[m] of C_m(H)"

    def run(self, **options):
        domain = self.context.service(ClusterService).fundamental_domain()
        lines = [f"{len(domain)} indecomposables for m={domain.m}"] + [v.name for v in domain]
        self.emit(options, FundamentalDomainSerializer(domain).data, lines)
