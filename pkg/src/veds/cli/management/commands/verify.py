from django.core.management.base import CommandError

from veds.api.serializers import VerifyResultSerializer
from veds.graphs.formats import read_graph
from veds.graphs.graph import is_ve_dominating_set, parse_vertex_set

from ...base import VedsCommand


class Command(VedsCommand):
    help = "Check that a vertex set dominates every edge; exits 1 when it does not."

    def add_arguments(self, parser):
        parser.add_argument("file", help="Graph file.")
        parser.add_argument(
            "--set",
            dest="vertices",
            required=True,
            help="Vertex names separated by commas or spaces, e.g. 'x1, y2'.",
        )
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        document = read_graph(options["file"])
        vertices = parse_vertex_set(options["vertices"])
        valid = is_ve_dominating_set(document.graph, vertices)

        if options["json"]:
            result = {"valid": valid, "size": len(vertices)}
            self.write_json(VerifyResultSerializer(result).data)
        else:
            self.stdout.write("VALID" if valid else "INVALID")

        if not valid:
            raise CommandError("the set leaves some edge undominated", returncode=1)
