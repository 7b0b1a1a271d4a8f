from core.management.base import MClusterCommand
from quivers.services import QuiverService


class Command(MClusterCommand):
    help = "List the positive roots of a Dynkin quiver"

    def run(self, **options):
        quiver = self.context.quiver
        roots = QuiverService().positive_roots(quiver)
        data = {
            'quiver': quiver.to_dict(),
            'types': QuiverService().dynkin_types(quiver),
            'roots': [root.as_dict() for root in roots],
        }
        lines = [f"{quiver.label}: {len(roots)} positive roots"] + [str(root) for root in roots]
        self.emit(options, data, lines)
