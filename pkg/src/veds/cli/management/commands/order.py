from veds.api.serializers import LexConvexOrderingSerializer
from veds.graphs.formats import read_graph
from veds.graphs.ordering import resolve_ordering

from ...base import VedsCommand


class Command(VedsCommand):
    help = (
        "Print the lex-convex ordering of a graph. Without a 'yorder' in the file "
        "the Y side is searched exhaustively."
    )

    def add_arguments(self, parser):
        parser.add_argument("file", help="Graph file.")
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        document = read_graph(options["file"])
        ordering = resolve_ordering(document.graph, document.yorder)

        if options["json"]:
            self.write_json(LexConvexOrderingSerializer(ordering).data)
            return

        lines = [
            "yorder = " + " ".join(map(str, ordering.yperm)),
            "xperm = " + " ".join(map(str, ordering.xperm)),
        ]
        for position, x in enumerate(ordering.xperm, start=1):
            left, right = ordering.left(position), ordering.right(position)
            span = "isolated" if left is None else f"[{left}, {right}]"
            lines.append(f"  x{x:<4} {span}")
        self.write_lines(lines)
