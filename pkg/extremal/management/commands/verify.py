import logging

from django.conf import settings

from core.helpers import EXIT_VIOLATION, command_failure
from extremal.management.commands._graph_command import LabCommand
from extremal.serializers.option_serializer import VerifyOptionsSerializer
from extremal.utils.enumeration_utils import EnumerationError, EnumerationMode
from extremal.utils.oracle_utils import available_jobs, check_theorem, sample_theorem, summary_table
from extremal.utils.sweep_utils import drift_since_previous, record_sweep

logger = logging.getLogger(__name__)


class Command(LabCommand):
    help = (
        "Sweep every connected graph up to --max-n vertices and check that a zero gap coincides with "
        "a TypeA/TypeB classification. Prints a tab-separated summary and any counterexamples as graph6."
    )

    def add_arguments(self, parser):
        parser.add_argument("--max-n", type=int, required=True, help="Largest vertex count to sweep")
        parser.add_argument(
            "--mode", default=None, help="labeled (n <= 7, the default) or unlabeled (n <= 8); not with --sample"
        )
        parser.add_argument("--jobs", type=int, default=None, help="Worker processes; 0 uses every available CPU")
        parser.add_argument(
            "--sample", type=int, default=None, help="Check this many random edge subsets at n = --max-n instead"
        )
        parser.add_argument("--seed", type=int, default=None, help="Seed for --sample")
        parser.add_argument("--record", action="store_true", help="Store the run and compare with the previous one")

    def handle(self, *args, **options):
        self.configure_logging(options["verbosity"])
        data = self.validated_options(
            VerifyOptionsSerializer, options, ("max_n", "mode", "jobs", "sample", "seed", "record")
        )
        jobs = data["jobs"] or available_jobs()
        chunk_size = settings.GRAPH_LAB["CHUNK_SIZE"]
        logger.info("Sweeping %s graphs up to n=%d with %d worker(s)", data["mode"], data["max_n"], jobs)

        try:
            if data["mode"] == EnumerationMode.SAMPLED:
                summaries = [sample_theorem(data["max_n"], data["sample"], data["seed"], jobs, chunk_size)]
            else:
                summaries = check_theorem(data["max_n"], data["mode"], jobs, chunk_size)
        except EnumerationError as e:
            raise command_failure(EXIT_VIOLATION, "Enumeration check failed", str(e))

        lines = [summary_table(summaries).rstrip("\n")]
        for summary in summaries:
            lines.extend(summary.counterexamples)
            lines.extend(summary.bound_violations)
        self.write_lines(lines)

        drift = {}
        if data["record"]:
            run = record_sweep(
                summaries, data["mode"], data["max_n"], jobs, seed=data["seed"], samples=data.get("sample")
            )
            drift = drift_since_previous(run)

        failures = sum(len(s.counterexamples) + len(s.bound_violations) for s in summaries)
        if failures:
            raise command_failure(EXIT_VIOLATION, f"{failures} graph(s) violate the extremal characterization")
        if drift:
            raise command_failure(EXIT_VIOLATION, "Sweep counts differ from the previous recorded run", drift)
