import logging
import sys

from django.core.management.base import BaseCommand

from core.helpers import EXIT_USAGE, command_failure
from core.serializers.graph_serializer import GraphSourceSerializer
from core.utils.format_utils import GraphFormat

LOGGER_NAMES = ("core", "extremal")


class LabCommand(BaseCommand):
    requires_system_checks = []

    def configure_logging(self, verbosity):
        """Map Django's --verbosity onto the project loggers (2: INFO, 3: DEBUG)"""
        if verbosity < 2:
            return
        level = logging.DEBUG if verbosity >= 3 else logging.INFO
        for name in LOGGER_NAMES:
            logging.getLogger(name).setLevel(level)

    def validated_options(self, serializer_class, options, fields):
        serializer = serializer_class(data={field: options.get(field) for field in fields})
        if not serializer.is_valid():
            raise command_failure(EXIT_USAGE, "Invalid options", serializer.errors)
        return serializer.validated_data

    def write_lines(self, lines):
        # Single writer: results are assembled first, then emitted in order
        for line in lines:
            self.stdout.write(line)


class GraphInputCommand(LabCommand):
    """Base for commands that read graphs from a file or stdin"""

    require_connected = False

    def add_arguments(self, parser):
        parser.add_argument("input", nargs="?", default="-", help="Graph file (graph6 or edge list); '-' for stdin")
        parser.add_argument(
            "--format",
            choices=GraphFormat.values,
            default=None,
            help="Input format; inferred from the first line when omitted",
        )

    def read_input(self, path):
        try:
            if path == "-":
                return sys.stdin.buffer.read().decode("utf-8")
            with open(path, encoding="utf-8") as handle:
                return handle.read()
        except (OSError, UnicodeDecodeError) as e:
            source = "stdin" if path == "-" else path
            raise command_failure(EXIT_USAGE, f"Cannot read {source}", str(e))

    def load_graphs(self, options):
        self.configure_logging(options["verbosity"])
        serializer = GraphSourceSerializer(
            data={
                "text": self.read_input(options["input"]),
                "format": options["format"],
                "require_connected": self.require_connected,
            }
        )
        if not serializer.is_valid():
            raise command_failure(EXIT_USAGE, "Invalid graph input", serializer.errors)
        return serializer.validated_data["graphs"]
