import argparse
import logging

from django.core.management.base import BaseCommand, CommandError, DjangoHelpFormatter

from rest_framework.renderers import JSONRenderer

from veds.graphs.exceptions import VedsError
from veds.graphs.formats import GRAPH_GRAMMAR
from veds.reductions.formats import SET_SYSTEM_GRAMMAR


class VedsHelpFormatter(DjangoHelpFormatter, argparse.RawDescriptionHelpFormatter):
    pass


class VedsCommand(BaseCommand):
    """
    Base for the ``veds`` subcommands.

    Library errors leave with the exit code of their class, results go to
    stdout and diagnostics to stderr.
    """

    epilog = GRAPH_GRAMMAR + "\n" + SET_SYSTEM_GRAMMAR

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.formatter_class = VedsHelpFormatter
        parser.epilog = self.epilog
        return parser

    def add_json_argument(self, parser):
        parser.add_argument(
            "--json", action="store_true", help="Emit JSON instead of aligned text."
        )

    def execute(self, *args, **options):
        level = logging.DEBUG if options.get("verbosity", 1) >= 2 else logging.WARNING
        for name in ("veds", "performance"):
            logging.getLogger(name).setLevel(level)

        try:
            return super().execute(*args, **options)
        except VedsError as exc:
            raise CommandError(str(exc), returncode=exc.exit_code) from exc

    def write_json(self, data):
        rendered = JSONRenderer().render(data, renderer_context={"indent": 2})
        self.stdout.write(rendered.decode("utf-8"))

    def write_lines(self, lines):
        for line in lines:
            self.stdout.write(line)
