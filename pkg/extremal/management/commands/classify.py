from extremal.management.commands._graph_command import GraphInputCommand
from extremal.utils.gap_utils import classify


class Command(GraphInputCommand):
    help = "Classify every input graph as TypeA, TypeB or Neither from its leaf-stripped core."
    require_connected = True

    def handle(self, *args, **options):
        graphs = self.load_graphs(options)
        self.write_lines([classify(g).as_line() for g in graphs])
