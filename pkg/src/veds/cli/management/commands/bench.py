import argparse
import time

from veds.api.serializers import BenchReportSerializer, CrossCheckReportSerializer
from veds.graphs.fixtures import fixture_path
from veds.graphs.formats import read_graph
from veds.oracle.bench import bench_scaling, bench_trials
from veds.oracle.crosscheck import cross_check

from ...base import VedsCommand

SHIPPED_GRAPHS = ("counterexample.cbg", "p8.cbg")


def size_list(text):
    try:
        return [int(size) for size in text.split(",") if size.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got '{text}'"
        ) from exc


class Command(VedsCommand):
    help = (
        "By default, check the exact solver against the exhaustive oracle and the "
        "chain baseline on seeded random graphs with n1 + n2 <= --max-n. "
        "--timing and --scaling time the exact solver instead."
    )

    def add_arguments(self, parser):
        parser.add_argument("--trials", type=int, default=100)
        parser.add_argument(
            "--max-n",
            type=int,
            default=14,
            help="Cap on n1 + n2 for agreement runs, on each side for --timing.",
        )
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument(
            "--workers", type=int, help="Process pool size for the trials."
        )
        mode = parser.add_mutually_exclusive_group()
        mode.add_argument(
            "--timing",
            action="store_true",
            help="Time the exact solver on random graphs.",
        )
        mode.add_argument(
            "--scaling",
            action="store_true",
            help="Time the exact solver on n x n graphs at VEDS_BENCH_SIZES.",
        )
        mode.add_argument(
            "--with-fixtures",
            action="store_true",
            help="Add the shipped graphs to the agreement run.",
        )
        parser.add_argument(
            "--no-memo",
            action="store_true",
            help="Time the recursion without its memo table.",
        )
        parser.add_argument(
            "--sizes", type=size_list, help="Comma-separated sizes for --scaling."
        )
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        memoize = not options["no_memo"]
        if options["timing"]:
            report = bench_trials(
                options["trials"],
                options["max_n"],
                seed=options["seed"],
                memoize=memoize,
                workers=options["workers"],
            )
            self.emit_timing(report, options)
        elif options["scaling"]:
            report = bench_scaling(
                options["sizes"],
                seed=options["seed"],
                memoize=memoize,
                workers=options["workers"],
            )
            self.emit_timing(report, options)
        else:
            self.agreement(options)

    def agreement(self, options):
        instances = []
        if options["with_fixtures"]:
            instances = [
                (name, read_graph(fixture_path(name))) for name in SHIPPED_GRAPHS
            ]

        started = time.perf_counter()
        report = cross_check(
            options["trials"],
            size_cap=options["max_n"],
            seed=options["seed"],
            workers=options["workers"],
            instances=instances,
        )
        elapsed = time.perf_counter() - started

        if options["json"]:
            self.write_json(CrossCheckReportSerializer(report).data)
            return

        lines = [
            f"trials = {report.trials}",
            f"agreements = {report.agreements}",
            f"disagreements = {len(report.disagreements)}",
            "baseline gaps = "
            + (
                ", ".join(
                    f"{gap}: {count}" for gap, count in report.baseline_gaps.items()
                )
                or "none"
            ),
        ]
        for outcome in report.outcomes:
            if outcome.label != "random":
                lines.append(
                    f"  {outcome.label}: exact={outcome.exact} oracle={outcome.oracle} "
                    f"baseline={outcome.baseline}"
                )
        for outcome in report.disagreements:
            problem = outcome.error or "mismatch"
            lines.append(f"trial {outcome.index} ({outcome.label}): {problem}")
            lines.extend("  " + line for line in outcome.instance.splitlines())
        self.write_lines(lines)
        self.stderr.write(f"finished in {elapsed:.1f}s")

    def emit_timing(self, report, options):
        if options["json"]:
            self.write_json(BenchReportSerializer(report).data)
            return

        lines = [f"{'n1':>6} {'n2':>6} {'m':>8} {'gamma':>6} {'states':>8} {'ms':>10}"]
        lines.extend(
            f"{row.n1:>6} {row.n2:>6} {row.m:>8} {row.gamma_ve:>6} {row.states:>8} "
            f"{row.elapsed_ms:>10.2f}"
            for row in report.rows
        )
        lines.append(f"total = {report.total_ms:.2f} ms, max = {report.max_ms:.2f} ms")
        if report.slope is not None:
            lines.append(f"log-log slope = {report.slope:.2f}")
        self.write_lines(lines)
