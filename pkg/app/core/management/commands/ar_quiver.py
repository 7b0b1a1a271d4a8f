from core.management.base import MClusterCommand
from quivers.serializers import ARQuiverSerializer


class Command(MClusterCommand):
    help = "Knit and print the Auslander-Reiten quiver of mod H"

    def run(self, **options):
        ar = self.context.ar
        lines = [f"{ar.quiver.label}: {len(ar)} indecomposables"]
        for vertex in ar.vertices:
            marks = []
            if vertex.is_projective:
                marks.append(f"P({vertex.projective_of})")
            if vertex.is_injective:
                marks.append(f"I({vertex.injective_of})")
            tau = ar.tau_module(vertex)
            lines.append(
                f"{vertex.slice_index:>3}  {vertex.name:<12} ({vertex.orbit}, {vertex.level})"
                f"  tau={tau.name if tau else '-'}  {' '.join(marks)}".rstrip()
            )
        self.emit(options, ARQuiverSerializer(ar).data, lines)
