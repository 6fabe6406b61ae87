from django.core.management.base import CommandError

from veds.api.serializers import ChainDecompositionSerializer, LemmaReportSerializer
from veds.graphs.decomposition import decompose, verify_decomposition_lemma
from veds.graphs.formats import read_graph
from veds.graphs.graph import VertexRef, format_vertex_set
from veds.graphs.ordering import resolve_ordering

from ...base import VedsCommand


class Command(VedsCommand):
    help = "Print the chain decomposition (H1, J1, H2, ...) of a connected graph."

    def add_arguments(self, parser):
        parser.add_argument("file", help="Graph file.")
        parser.add_argument(
            "--no-lemma",
            action="store_true",
            help="Skip the per-chain check of the three structural clauses.",
        )
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        document = read_graph(options["file"])
        g = document.graph
        decomposition = decompose(g, resolve_ordering(g, document.yorder))
        report = None
        if not options["no_lemma"]:
            report = verify_decomposition_lemma(g, decomposition)

        if options["json"]:
            data = {"decomposition": ChainDecompositionSerializer(decomposition).data}
            if report is not None:
                data["lemma"] = LemmaReportSerializer(report).data
            self.write_json(data)
        else:
            self.write_lines(self.describe(decomposition, report))

        if report is not None and not report.passed:
            raise CommandError(
                "the decomposition fails its structural lemma", returncode=1
            )

    def describe(self, decomposition, report):
        lines = []
        for number, (chain, isolated) in enumerate(
            zip(decomposition.chains, decomposition.isolated_sets), start=1
        ):
            xs = format_vertex_set(VertexRef.x(x) for x in chain.xs)
            ys = format_vertex_set(VertexRef.y(y) for y in chain.ys)
            lines.append(f"H{number}: X = {xs}  Y = {ys}  pivot = x{chain.pivot}")
            lines.append(
                f"J{number}: " + format_vertex_set(VertexRef.x(x) for x in isolated)
            )
        if decomposition.tail_isolated:
            lines.append("left over: " + format_vertex_set(decomposition.tail_isolated))

        if report is not None:
            for result in report.results:
                status = "ok" if result.passed else "FAILED"
                if result.vacuous:
                    status = "vacuous"
                detail = f"  {result.detail}" if result.detail else ""
                lines.append(
                    f"  H{result.chain} clause {result.clause}: {status}{detail}"
                )
            lines.append("lemma: " + ("PASSED" if report.passed else "FAILED"))
        return lines
