import os

from django.core.management.base import CommandError

from heteromotif.core.exceptions import ContractViolation, GraphFormatError
from heteromotif.core.management.base import INPUT_ERROR, BaseGraphCommand
from heteromotif.graphs.loaders import save_cache, write_edge_list


class Command(BaseGraphCommand):
    """
    Generates an ER or Chung-Lu graph with uniformly assigned node
    types, and writes it as ``edges.txt`` and ``types.txt`` in the
    output directory, plus ``graph.npz`` with ``--cache``.
    """

    help = "Generates a random typed graph."
    out_required = True

    def add_arguments(self, parser):
        parser.add_argument("--out", required=True, help="Output directory.")
        parser.add_argument("--seed", type=int, help="Random seed.")
        parser.add_argument(
            "--cache",
            action="store_true",
            help="Also write the binary graph cache.",
        )
        self.add_generator_arguments(parser)

    def handle(self, **options):
        self.verbosity = int(options.get("verbosity", 1))
        if not options.get("model"):
            raise CommandError("--model is required", returncode=INPUT_ERROR)
        try:
            graph = self.gen_spec(options, options.get("seed")).build()
        except (GraphFormatError, ContractViolation) as e:
            raise CommandError(str(e), returncode=INPUT_ERROR)
        out = options["out"]
        os.makedirs(out, exist_ok=True)
        edges_path = os.path.join(out, "edges.txt")
        types_path = os.path.join(out, "types.txt")
        write_edge_list(graph, edges_path, types_path)
        if options.get("cache"):
            save_cache(graph, os.path.join(out, "graph.npz"))
        self.log(
            "Generated %s nodes, %s edges, %s node types in %s"
            % (graph.num_nodes, graph.num_edges, graph.num_node_types, out)
        )
