from core.helpers import EXIT_VIOLATION, command_failure
from extremal.management.commands._graph_command import LabCommand
from extremal.serializers.option_serializer import CheckLemmasOptionsSerializer
from extremal.utils.lemma_utils import (
    DecoratedBounds,
    decorated_chi_check,
    extremal_corpus,
    extremal_graphs,
    induction_step_check,
    lemma_big_check,
    pendant_closure_check,
    removal_heredity_check,
)


class Command(LabCommand):
    help = (
        "Run the lemma-level property suites: chromatic number of decorated graphs, pendant closure, "
        "and the vertex-removal lemma on every extremal graph up to --max-n vertices."
    )

    def add_arguments(self, parser):
        parser.add_argument("--trials", type=int, default=None, help="Random graphs per suite")
        parser.add_argument("--seed", type=int, default=None, help="Seed for the random suites")
        parser.add_argument("--max-n", type=int, default=None, help="Largest extremal graph for the removal suites")
        parser.add_argument("--max-vertices", type=int, default=None, help="Size cap for decorated graphs")

    def handle(self, *args, **options):
        self.configure_logging(options["verbosity"])
        data = self.validated_options(
            CheckLemmasOptionsSerializer, options, ("trials", "seed", "max_n", "max_vertices")
        )
        trials, seed = data["trials"], data["seed"]
        bounds = DecoratedBounds(max_vertices=data["max_vertices"])

        results = [("decorated_chi", decorated_chi_check(trials, seed, bounds), trials * 3)]

        corpus = extremal_corpus(trials, seed, bounds)
        closure = all(pendant_closure_check(g, 1, seed + index) for index, g in enumerate(corpus))
        results.append(("pendant_closure", closure, len(corpus)))

        extremal = list(extremal_graphs(data["max_n"]))
        for name, check in (
            ("lemma_big", lemma_big_check),
            ("removal_heredity", removal_heredity_check),
            ("induction_step", induction_step_check),
        ):
            results.append((name, all(check(g) for g in extremal), len(extremal)))

        self.write_lines(f"{name}\t{'PASS' if ok else 'FAIL'}\t{count}" for name, ok, count in results)

        failed = [name for name, ok, _ in results if not ok]
        if failed:
            raise command_failure(EXIT_VIOLATION, "Property suites failed", failed)
