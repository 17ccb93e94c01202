import os
from dataclasses import dataclass

from django.core.management.base import BaseCommand, CommandError

from heteromotif.conf import settings
from heteromotif.core.exceptions import (
    ContractViolation,
    GraphFormatError,
    OracleCapExceeded,
)
from heteromotif.graphs.loaders import load_cache, load_edge_list
from heteromotif.synth.generators import MODELS, GenSpec

# Exit status for bad input, a failed verification exits with 1.
INPUT_ERROR = 2


def comma_ints(value):
    """
    Parses a comma separated list of integers, eg ``--sizes 1000,10000``.
    """
    return [int(v) for v in value.split(",") if v.strip()]


@dataclass
class RunConfig:
    """
    Options shared by every command, validated before any work starts.
    """

    subcommand: str
    graph: str = None
    types: str = None
    out: str = None
    workers: int = 1
    max_k: int = 4
    emit: str = "orbit"
    seed: int = None

    def validate(self):
        if self.workers < 1:
            raise CommandError(
                "--threads must be at least 1, got %s" % self.workers,
                returncode=INPUT_ERROR,
            )
        if self.max_k not in (3, 4):
            raise CommandError(
                "--max-k must be 3 or 4, got %s" % self.max_k, returncode=INPUT_ERROR
            )
        for path in (self.graph, self.types):
            if path is not None and not os.path.isfile(path):
                raise CommandError("No such file: %s" % path, returncode=INPUT_ERROR)
        return self


class BaseGraphCommand(BaseCommand):
    """
    Base command for the commands working on a graph, given either as
    edge and type files with ``--graph`` and ``--types`` (or a binary
    cache with ``--graph`` alone), or as a generator spec with
    ``--model`` and its options. The ``handle_graph`` method should be
    overridden to do the actual work.

    Input errors are reported as ``CommandError`` with exit status 2.
    """

    # Whether --out is required.
    out_required = False

    def add_arguments(self, parser):
        parser.add_argument(
            "--graph",
            help="Edge list file, or a .npz graph cache.",
        )
        parser.add_argument(
            "--types",
            help="Node type file, one 'node_id type_label' per line.",
        )
        parser.add_argument(
            "--out",
            required=self.out_required,
            help="Output directory.",
        )
        parser.add_argument(
            "--threads",
            type=int,
            dest="workers",
            help="Number of worker processes. Defaults to MOTIFS_WORKERS.",
        )
        parser.add_argument(
            "--max-k",
            type=int,
            dest="max_k",
            help="Largest graphlet size counted, 3 or 4. Defaults to MOTIFS_MAX_K.",
        )
        parser.add_argument(
            "--emit",
            choices=("orbit", "graphlet"),
            default="orbit",
            help="Write counts per orbit, or rolled up per graphlet.",
        )
        parser.add_argument(
            "--seed",
            type=int,
            help="Random seed for generated graphs and type shuffling.",
        )
        self.add_generator_arguments(parser)

    def add_generator_arguments(self, parser):
        parser.add_argument(
            "--model",
            choices=MODELS,
            help="Generate the graph instead of loading it: er or cl.",
        )
        parser.add_argument("--n", type=int, help="Number of generated nodes.")
        parser.add_argument("--p", type=float, help="ER edge probability.")
        parser.add_argument(
            "--L",
            type=int,
            dest="num_types",
            default=1,
            help="Number of node types assigned uniformly at random.",
        )
        parser.add_argument(
            "--exponent", type=float, help="Power-law exponent of CL weights."
        )
        parser.add_argument(
            "--avg-degree",
            type=float,
            dest="avg_degree",
            help="Target average degree of generated graphs.",
        )

    def log(self, message, level=1):
        if self.verbosity >= level:
            self.stdout.write(message)

    def run_config(self, options):
        return RunConfig(
            subcommand=self.__module__.rsplit(".", 1)[-1],
            graph=options.get("graph"),
            types=options.get("types"),
            out=options.get("out"),
            workers=(
                settings.MOTIFS_WORKERS
                if options.get("workers") is None
                else options["workers"]
            ),
            max_k=(
                settings.MOTIFS_MAX_K
                if options.get("max_k") is None
                else options["max_k"]
            ),
            emit=options.get("emit") or "orbit",
            seed=options.get("seed"),
        ).validate()

    def gen_spec(self, options, seed=None):
        return GenSpec(
            model=options["model"],
            n=options.get("n") or 0,
            p=options.get("p"),
            exponent=options.get("exponent"),
            avg_degree=options.get("avg_degree"),
            num_types=options.get("num_types") or 1,
            seed=seed,
        )

    def load_graph(self, config, options):
        if config.graph:
            if config.graph.endswith(".npz"):
                graph = load_cache(config.graph)
            elif not config.types:
                raise CommandError(
                    "--types is required with an edge list", returncode=INPUT_ERROR
                )
            else:
                graph = load_edge_list(config.graph, config.types)
        elif options.get("model"):
            graph = self.gen_spec(options, config.seed).build()
        else:
            raise CommandError(
                "Give a graph with --graph and --types, or generate one with --model",
                returncode=INPUT_ERROR,
            )
        self.log(
            "Graph: %s nodes, %s edges, %s node types, max degree %s"
            % (
                graph.num_nodes,
                graph.num_edges,
                graph.num_node_types,
                graph.max_degree(),
            ),
            level=2,
        )
        return graph

    def out_path(self, config, name):
        os.makedirs(config.out, exist_ok=True)
        return os.path.join(config.out, name)

    def handle(self, **options):
        self.verbosity = int(options.get("verbosity", 1))
        try:
            config = self.run_config(options)
            graph = self.load_graph(config, options)
            self.handle_graph(graph, config, options)
        except (GraphFormatError, ContractViolation, OracleCapExceeded) as e:
            raise CommandError(str(e), returncode=INPUT_ERROR)

    def handle_graph(self, graph, config, options):
        """
        Should be overridden by subclasses to do the work on the graph.
        """
        raise NotImplementedError
