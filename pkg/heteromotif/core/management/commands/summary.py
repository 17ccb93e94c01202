from heteromotif.analysis.aggregate import (
    edge_key_stats,
    entropy,
    global_counts,
    homophily_share,
    typed_distribution,
    unique_counts_summary,
)
from heteromotif.conf import settings
from heteromotif.core.management.base import BaseGraphCommand
from heteromotif.motifs.codec import describe
from heteromotif.motifs.parallel import count_all
from heteromotif.synth.generators import assign_types_uniform


class Command(BaseGraphCommand):
    """
    Reports, for every graphlet on 3 to ``--max-k`` nodes, how many of its typed
    variants occur out of how many are possible, the entropy of its
    typed distribution, the share of single-typed instances, and its
    most frequent variants.

    With ``--shuffle-types`` the same report follows for the graph with
    its types reassigned uniformly at random, as a baseline for how
    much of the structure is due to the types.
    """

    help = "Summarizes the typed graphlet distributions of a graph."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--top",
            type=int,
            help="Typed variants listed per graphlet. Defaults to SUMMARY_TOP_K.",
        )
        parser.add_argument(
            "--shuffle-types",
            action="store_true",
            dest="shuffle_types",
            help="Also report on the graph with uniformly reassigned types.",
        )

    def handle_graph(self, graph, config, options):
        top = options.get("top") or settings.SUMMARY_TOP_K
        self.report("observed", graph, config, top)
        if options.get("shuffle_types"):
            shuffled = assign_types_uniform(graph, graph.num_node_types, config.seed)
            self.report("shuffled", shuffled, config, top)

    def report(self, title, graph, config, top):
        counts = count_all(graph, workers=config.workers, max_k=config.max_k)
        gc = global_counts(counts)
        most, mean = edge_key_stats(counts)
        write = self.stdout.write
        write(
            "# %s: N=%s M=%s L=%s"
            % (title, graph.num_nodes, graph.num_edges, graph.num_node_types)
        )
        write("# distinct typed orbits per edge: max %s, mean %.2f" % (most, mean))
        write("graphlet\tobserved\tpossible\tforbidden\tentropy\thomophily")
        summaries = unique_counts_summary(gc, graph.num_node_types, config.max_k)
        for s in summaries:
            share = homophily_share(gc, s.graphlet)
            write(
                "%s\t%s\t%s\t%s\t%.4f\t%s"
                % (
                    s.name,
                    s.observed,
                    s.possible,
                    s.forbidden,
                    entropy(typed_distribution(gc, s.graphlet)),
                    "-" if share is None else "%.4f" % share,
                )
            )
        if self.verbosity < 1:
            return
        write("graphlet\trank\ttypes\tprobability")
        for s in summaries:
            distribution = typed_distribution(gc, s.graphlet)
            for rank, (key, p) in enumerate(distribution.top(top), 1):
                types = describe(key).types
                labels = ",".join(graph.type_labels[t - 1] for t in types)
                write("%s\t%s\t%s\t%.6f" % (s.name, rank, labels, p))
