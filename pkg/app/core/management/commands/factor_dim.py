from core.management.base import MClusterCommand


class Command(MClusterCommand):
    help = "Dimension of the maps x -> z factoring through a set of indecomposables"

    def add_command_arguments(self, parser):
        parser.add_argument('--from', dest='source', required=True)
        parser.add_argument('--to', dest='target', required=True)
        parser.add_argument('--through', nargs='+', required=True, help='Intermediate indecomposables')

    def run(self, **options):
        model, mesh = self.context.model, self.context.mesh
        x = model.parse_name(options['source'])
        z = model.parse_name(options['target'])
        through = [model.parse_name(name) for name in options['through']]
        data = {
            'from': x.name,
            'to': z.name,
            'through': [w.name for w in through],
            'hom': model.hom_derived(x, z),
            'factoring_dim': mesh.factoring_dim(x, z, through),
        }
        self.emit(options, data, [
            f"dim Hom({x.name}, {z.name}) = {data['hom']}",
            f"factoring through {', '.join(data['through'])}: {data['factoring_dim']}",
        ])
