from core.management.base import MClusterCommand


class Command(MClusterCommand):
    help = "Hom dimensions in D^b(H) and in C_m(H) between two indecomposables"

    def add_command_arguments(self, parser):
        parser.add_argument('--from', dest='source', required=True, help='Source, e.g. 110 or 01[1]')
        parser.add_argument('--to', dest='target', required=True, help='Target')
        parser.add_argument('--shift', type=int, default=0, help='k in Hom(x, y[k]) and Ext^k_C(x, y)')

    def run(self, **options):
        model = self.context.model
        x = model.parse_name(options['source'])
        y = model.parse_name(options['target'])
        k = options['shift']
        data = {
            'from': x.name,
            'to': y.name,
            'shift': k,
            'hom_derived': model.hom_derived(x, y.shifted(k)),
            'hom_orbit': model.hom_orbit(x, y, k),
        }
        self.emit(options, data, [
            f"dim Hom_D({x.name}, {y.shifted(k).name}) = {data['hom_derived']}",
            f"dim Ext^{k}_C({x.name}, {y.name}) = {data['hom_orbit']}",
        ])
