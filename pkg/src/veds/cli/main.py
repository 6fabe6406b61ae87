"""
Entry point of the ``veds`` executable.

Each subcommand is a Django management command of the ``veds.cli`` app, run
with its own argument parser.
"""
import sys

import django
from django.core.management import load_command_class

from veds.graphs.formats import GRAPH_GRAMMAR
from veds.reductions.formats import SET_SYSTEM_GRAMMAR
from veds.setup import setup_env

COMMANDS = {
    "solve": "Minimum VE-dominating set of a convex bipartite graph.",
    "verify": "Check that a vertex set dominates every edge.",
    "order": "Lex-convex ordering of a graph.",
    "decompose": "Chain decomposition, optionally checked against its lemma.",
    "reduce": "Reduce a set system to a star- or comb-convex graph.",
    "oracle": "Exhaustive searches and the set cover approximation.",
    "gen": "Seeded random convex bipartite graphs.",
    "bench": "Agreement runs against the oracle and timing runs.",
}


def usage() -> str:
    lines = ["usage: veds <subcommand> [options]", "", "Subcommands:"]
    lines.extend(f"  {name:<10} {summary}" for name, summary in COMMANDS.items())
    lines.extend(["", "Run 'veds <subcommand> --help' for its options.", ""])
    return "\n".join(lines) + "\n" + GRAPH_GRAMMAR + "\n" + SET_SYSTEM_GRAMMAR


def run(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    setup_env()
    django.setup()

    if not argv or argv[0] in ("-h", "--help", "help"):
        stream = sys.stdout if argv else sys.stderr
        stream.write(usage())
        return 0 if argv else 2

    name, rest = argv[0], argv[1:]
    if name not in COMMANDS:
        sys.stderr.write(f"veds: unknown subcommand '{name}'\n\n{usage()}")
        return 2

    command = load_command_class("veds.cli", name)
    try:
        command.run_from_argv(["veds", name, *rest])
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0


def main():
    sys.exit(run())
