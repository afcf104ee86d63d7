from core.helpers import EXIT_USAGE, command_failure
from core.models.graph import GraphError
from core.utils.coloring_utils import chromatic_number
from extremal.management.commands._graph_command import GraphInputCommand


class Command(GraphInputCommand):
    help = "Print the chromatic number of every input graph, one line each."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--witness", action="store_true", help="Append the optimal coloring as v:color pairs")

    def handle(self, *args, **options):
        graphs = self.load_graphs(options)

        lines = []
        for index, g in enumerate(graphs, start=1):
            try:
                chi, coloring = chromatic_number(g)
            except GraphError as e:
                raise command_failure(EXIT_USAGE, f"Graph {index}", str(e))
            line = f"chi={chi}"
            if options["witness"]:
                line = " ".join([line, *coloring.pairs()])
            lines.append(line)

        self.write_lines(lines)
