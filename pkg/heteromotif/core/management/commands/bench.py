import csv

from django.core.management.base import CommandError

from heteromotif.core.exceptions import ContractViolation, GraphFormatError
from heteromotif.core.management.base import (
    INPUT_ERROR,
    BaseGraphCommand,
    comma_ints,
)
from heteromotif.motifs.parallel import count_all
from heteromotif.synth.generators import GenSpec

DEFAULT_AVG_DEGREE = 10


class Command(BaseGraphCommand):
    """
    Times ``count_all`` over a range of graph sizes and worker counts,
    writing the CSV rows ``n,M,workers,seconds``. Graphs are ER graphs
    generated for every size in ``--sizes``, or the single graph given
    with ``--graph``.
    """

    help = "Times motif counting for scaling and speedup plots."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--sizes",
            type=comma_ints,
            default=[],
            help="Comma separated node counts of the generated graphs.",
        )
        parser.add_argument(
            "--threads-list",
            type=comma_ints,
            dest="threads_list",
            default=[1],
            help="Comma separated worker counts to time each graph with.",
        )

    def graphs(self, config, options):
        if config.graph or not options.get("sizes"):
            yield self.load_graph(config, options)
            return
        avg_degree = options.get("avg_degree") or DEFAULT_AVG_DEGREE
        for n in options["sizes"]:
            spec = GenSpec(
                model=options.get("model") or "er",
                n=n,
                p=None if options.get("model") == "cl" else options.get("p"),
                exponent=options.get("exponent"),
                avg_degree=avg_degree,
                num_types=options.get("num_types") or 1,
                seed=config.seed,
            )
            yield spec.build()

    def handle(self, **options):
        self.verbosity = int(options.get("verbosity", 1))
        try:
            config = self.run_config(options)
            threads = options.get("threads_list") or [config.workers]
            if min(threads) < 1:
                raise CommandError(
                    "--threads-list values must be at least 1", returncode=INPUT_ERROR
                )
            rows = []
            for graph in self.graphs(config, options):
                for workers in threads:
                    counts = count_all(graph, workers=workers, max_k=config.max_k)
                    rows.append(
                        (graph.num_nodes, graph.num_edges, workers, counts.elapsed)
                    )
                    self.log(
                        "n=%s M=%s workers=%s: %.3fs"
                        % (graph.num_nodes, graph.num_edges, workers, counts.elapsed),
                        level=2,
                    )
        except (GraphFormatError, ContractViolation) as e:
            raise CommandError(str(e), returncode=INPUT_ERROR)

        if config.out:
            path = self.out_path(config, "bench.csv")
            with open(path, "w", newline="", encoding="utf-8") as f:
                self.write_rows(f, rows)
            self.log("Wrote %s timings to %s" % (len(rows), path))
        else:
            self.write_rows(self.stdout, rows)

    def write_rows(self, f, rows):
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(("n", "M", "workers", "seconds"))
        for n, m, workers, seconds in rows:
            writer.writerow((n, m, workers, "%.6f" % seconds))
