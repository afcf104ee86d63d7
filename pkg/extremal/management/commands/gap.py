from extremal.management.commands._graph_command import GraphInputCommand
from extremal.utils.gap_utils import gap


class Command(GraphInputCommand):
    help = "Print n, m, chi and the edge surplus over the connected-graph bound for every input graph."
    require_connected = True

    def handle(self, *args, **options):
        graphs = self.load_graphs(options)
        self.write_lines([gap(g).as_line() for g in graphs])
