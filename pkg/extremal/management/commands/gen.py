import numpy as np

from core.utils.graph6_utils import encode_graph6
from extremal.management.commands._graph_command import LabCommand
from extremal.serializers.option_serializer import GenOptionsSerializer
from extremal.utils.decorated_utils import CoreKind, CoreSpec, attachments_from_spec, build_decorated


class Command(LabCommand):
    help = (
        "Emit decorated graphs as graph6: a K_M (typeA) or C_M (typeB, cycle) core with trees attached. "
        "--trees takes sizes on random anchors (3,1,2) or anchor:size pairs (0:3,2:1)."
    )

    def add_arguments(self, parser):
        parser.add_argument("--kind", required=True, help="typeA, typeB or cycle")
        parser.add_argument(
            "--core", type=int, required=True, help="Complete-graph order, or cycle length (typeB: odd, at least 5)"
        )
        parser.add_argument("--trees", default="", help="Tree spec")
        parser.add_argument("--seed", type=int, default=None, help="Seed for anchors and tree shapes")
        parser.add_argument("--count", type=int, default=1, help="Number of graphs to emit")

    def handle(self, *args, **options):
        self.configure_logging(options["verbosity"])
        data = self.validated_options(GenOptionsSerializer, options, ("kind", "core", "trees", "seed", "count"))

        kind = CoreKind.COMPLETE if data["kind"] == "typeA" else CoreKind.CYCLE
        core = CoreSpec(kind, data["core"])

        lines = []
        for child in np.random.SeedSequence(data["seed"]).spawn(data["count"]):
            rng = np.random.default_rng(child)
            attachments = attachments_from_spec(core.order, data["tree_entries"], rng)
            lines.append(encode_graph6(build_decorated(core, attachments)))
        self.write_lines(lines)
