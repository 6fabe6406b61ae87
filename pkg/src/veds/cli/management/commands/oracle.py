from veds.api.serializers import SetCoverSerializer, SolveResultSerializer
from veds.graphs.formats import read_graph
from veds.graphs.graph import format_vertex_set
from veds.oracle.bruteforce import brute_force_gamma_ve, brute_force_min_cover
from veds.reductions.approximation import approx_set_cover
from veds.reductions.formats import read_set_system

from ...base import VedsCommand

VE = "ve"
SETCOVER = "setcover"
APPROX = "approx"


class Command(VedsCommand):
    help = (
        "Exhaustive ground truth: 've' for gamma_ve of a graph, 'setcover' for a "
        "minimum set cover, 'approx' for the two-phase set cover approximation."
    )

    def add_arguments(self, parser):
        parser.add_argument("mode", choices=[VE, SETCOVER, APPROX])
        parser.add_argument(
            "file", help="Graph file for 've', set-system file otherwise."
        )
        parser.add_argument(
            "--k",
            type=int,
            default=1,
            help="Size threshold of the exhaustive phase of 'approx'.",
        )
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        mode = options["mode"]
        if mode == VE:
            result = brute_force_gamma_ve(read_graph(options["file"]).graph)
            if options["json"]:
                self.write_json(SolveResultSerializer(result).data)
            else:
                self.write_lines(
                    [
                        f"gamma_ve = {result.gamma_ve}",
                        f"witness = {format_vertex_set(result.witness)}",
                    ]
                )
            return

        ss = read_set_system(options["file"])
        lines = []
        if mode == SETCOVER:
            cover = brute_force_min_cover(ss)
        else:
            approximation = approx_set_cover(ss, options["k"])
            cover = approximation.cover
            lines.append(f"phase = {approximation.phase}")
            if approximation.vedset:
                lines.append(f"vedset = {format_vertex_set(approximation.vedset)}")

        data = {"cover": list(cover) if cover is not None else None}
        data["size"] = len(cover) if cover is not None else None
        if options["json"]:
            self.write_json(SetCoverSerializer(data).data)
            return

        if cover is None:
            lines.insert(0, "cover = none")
        else:
            lines.insert(0, f"size = {len(cover)}")
            lines.insert(0, "cover = {" + ", ".join(f"C{j}" for j in cover) + "}")
        self.write_lines(lines)
