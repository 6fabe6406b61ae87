from veds.api.serializers import SolveResultSerializer
from veds.graphs.constants import Algorithm, Branch
from veds.graphs.formats import read_graph
from veds.graphs.graph import format_vertex_set
from veds.solver.dispatch import solve

from ...base import VedsCommand


class Command(VedsCommand):
    help = "Compute gamma_ve, and optionally a witness set, of a convex graph."

    def add_arguments(self, parser):
        parser.add_argument("file", help="Graph file.")
        parser.add_argument(
            "--algorithm",
            choices=list(Algorithm.values),
            default=Algorithm.exact,
            help="'baseline' returns chain pivots and is not always minimum.",
        )
        parser.add_argument(
            "--emit-set", action="store_true", help="Print the witness set."
        )
        parser.add_argument(
            "--trace", action="store_true", help="Print the recursion trace."
        )
        parser.add_argument(
            "--no-memo",
            action="store_true",
            help="Run the exact recursion without its memo table.",
        )
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        document = read_graph(options["file"])
        result = solve(
            document.graph,
            document.yorder,
            algorithm=options["algorithm"],
            memoize=not options["no_memo"],
        )

        if options["json"]:
            context = {"trace": options["trace"]}
            serializer = SolveResultSerializer(result, context=context)
            self.write_json(serializer.data)
            return

        lines = [f"gamma_ve = {result.gamma_ve}"]
        if options["emit_set"]:
            lines.append(f"witness = {format_vertex_set(result.witness)}")
        if options["trace"]:
            lines.append("trace:")
            for number, step in enumerate(result.trace, start=1):
                chosen = step.chosen or "-"
                lines.append(
                    f"  {number:>3}  x_start={step.x_start} y_start={step.y_start} "
                    f"{Branch.values[step.branch]:<16} {chosen}"
                )
        self.write_lines(lines)
