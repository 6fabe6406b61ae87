from veds.api.serializers import GraphDocumentSerializer
from veds.graphs.exceptions import InputError
from veds.graphs.formats import dump_graph, write_graph
from veds.oracle.generators import GeneratorConfig, gen_random_convex_bipartite

from ...base import VedsCommand


class Command(VedsCommand):
    help = "Generate a seeded random convex bipartite graph with the identity yorder."

    def add_arguments(self, parser):
        parser.add_argument("kind", choices=["convex"])
        parser.add_argument("--n1", type=int, required=True)
        parser.add_argument("--n2", type=int, required=True)
        parser.add_argument("--density", type=float, required=True)
        parser.add_argument("--seed", type=int, required=True)
        parser.add_argument(
            "--connected",
            action="store_true",
            help="Resample until the graph is connected.",
        )
        output = parser.add_mutually_exclusive_group()
        output.add_argument("--out", help="Write to this file instead of stdout.")
        self.add_json_argument(output)

    def handle(self, *args, **options):
        cfg = GeneratorConfig(
            n1=options["n1"],
            n2=options["n2"],
            density=options["density"],
            seed=options["seed"],
            require_connected=options["connected"],
        )
        document = gen_random_convex_bipartite(cfg)
        comment = (
            f"gen convex --n1 {cfg.n1} --n2 {cfg.n2} "
            f"--density {cfg.density} --seed {cfg.seed}"
            + (" --connected" if cfg.require_connected else "")
        )

        out = options["out"]
        if out:
            try:
                write_graph(out, document, comment=comment)
            except OSError as exc:
                raise InputError(f"cannot write '{out}': {exc.strerror}") from exc
        elif options["json"]:
            self.write_json(GraphDocumentSerializer(document).data)
        else:
            text = dump_graph(document.graph, document.yorder, comment=comment)
            self.stdout.write(text, ending="")
