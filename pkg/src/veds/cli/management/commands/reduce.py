import os

from veds.api.serializers import ReductionSerializer
from veds.graphs.exceptions import InputError
from veds.graphs.formats import GraphDocument, read_graph, write_graph
from veds.reductions.certificates import COMB, STAR, verify_tree_convexity
from veds.reductions.constructions import REDUCTIONS
from veds.reductions.formats import read_certificate, read_set_system, write_certificate

from ...base import VedsCommand

CERTIFICATE_SUFFIX = ".tree"
SIZE_FORMULAS = {
    STAR: ("2p+q+3", lambda p, q: 2 * p + q + 3),
    COMB: ("3p+q+3", lambda p, q: 3 * p + q + 3),
}


class Command(VedsCommand):
    help = (
        "Reduce a set system to a star- or comb-convex graph. Writes the graph file "
        "and a '.tree' certificate sidecar next to it, then prints the role map."
    )

    def add_arguments(self, parser):
        parser.add_argument("file", help="Set-system file.")
        parser.add_argument("--target", choices=[STAR, COMB], required=True)
        parser.add_argument(
            "--out",
            help="Graph file to write, defaults to '<file stem>.<target>.cbg'.",
        )
        parser.add_argument(
            "--certify",
            action="store_true",
            help="Read both files back and check tree-convexity against the sidecar.",
        )
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        source = options["file"]
        target = options["target"]
        artifact = REDUCTIONS[target](read_set_system(source))

        out = options["out"] or "%s.%s.cbg" % (os.path.splitext(source)[0], target)
        sidecar = out + CERTIFICATE_SUFFIX
        try:
            write_graph(
                out,
                GraphDocument(artifact.graph),
                comment=f"{target}-convex reduction of {os.path.basename(source)}",
            )
            write_certificate(sidecar, artifact.certificate)
        except OSError as exc:
            raise InputError(f"cannot write '{out}': {exc.strerror}") from exc

        certified = None
        if options["certify"]:
            graph = read_graph(out).graph
            report = verify_tree_convexity(graph, read_certificate(sidecar, graph.n1))
            certified = report.valid
            if not report.valid:
                self.stderr.write(
                    f"N(y{report.violator}) is not a subtree of the certificate"
                )

        if options["json"]:
            data = ReductionSerializer(artifact, context={"certified": certified}).data
            self.write_json({**data, "graph_file": out, "certificate_file": sidecar})
        else:
            self.write_lines(self.describe(artifact, out, sidecar, certified))

    def describe(self, artifact, out, sidecar, certified):
        ss = artifact.set_system
        formula, size = SIZE_FORMULAS[artifact.kind]
        lines = [
            f"wrote {out}",
            f"wrote {sidecar}",
            f"p = {ss.p}, q = {ss.q}, vertices = {artifact.vertex_count} "
            f"({formula} = {size(ss.p, ss.q)}), edges = {artifact.graph.m}",
        ]
        if artifact.coverless:
            uncovered = " ".join(map(str, ss.uncovered))
            lines.append(f"coverless: elements {uncovered} lie in no set")
        if certified is not None:
            lines.append("tree-convex: " + ("VALID" if certified else "INVALID"))
        lines.append("roles:")
        lines.extend(f"  {role:<6} {vertex}" for role, vertex in artifact.roles.items())
        return lines
