import os

from heteromotif import __version__
from heteromotif.analysis.aggregate import orbits_to_graphlets
from heteromotif.conf import settings
from heteromotif.core.management.base import BaseGraphCommand
from heteromotif.motifs.parallel import count_all
from heteromotif.motifs.sparse import (
    assign_ids,
    write_binary_counts,
    write_counts,
    write_lookup,
    write_manifest,
)


class Command(BaseGraphCommand):
    """
    Counts the typed orbits of every edge and writes them in the sparse
    format: a counts file, a lookup table for its motif ids and a run
    manifest.
    """

    help = "Counts typed graphlet orbits for every edge of a graph."
    out_required = True

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--format",
            choices=("text", "binary"),
            default="text",
            help="Write the counts as text, or as numpy arrays in a .npz file.",
        )

    def handle_graph(self, graph, config, options):
        counts = count_all(graph, workers=config.workers, max_k=config.max_k)
        edges = counts.edges
        if config.emit == "graphlet":
            edges = [orbits_to_graphlets(e) for e in edges]

        if options.get("format") == "binary":
            name = os.path.splitext(settings.COUNTS_FILE_NAME)[0] + ".npz"
            counts_path = self.out_path(config, name)
            write_binary_counts(graph, edges, counts_path)
            ids = assign_ids(key for e in edges for key in e.counts)
        else:
            counts_path = self.out_path(config, settings.COUNTS_FILE_NAME)
            ids = write_counts(graph, edges, counts_path)
        write_lookup(ids, self.out_path(config, settings.LOOKUP_FILE_NAME))
        write_manifest(
            self.out_path(config, settings.MANIFEST_FILE_NAME),
            version=__version__,
            graph=config.graph,
            types=config.types,
            num_nodes=graph.num_nodes,
            num_edges=graph.num_edges,
            num_types=graph.num_node_types,
            type_labels=list(graph.type_labels),
            workers=counts.workers,
            max_k=counts.max_k,
            emit=config.emit,
            format=options.get("format") or "text",
            num_motifs=len(ids),
            seconds=round(counts.elapsed, 6),
        )
        self.log(
            "Wrote counts for %s edges and %s typed motifs to %s in %.3fs"
            % (graph.num_edges, len(ids), counts_path, counts.elapsed)
        )
