from django.core.management.base import CommandError

from heteromotif.analysis.aggregate import global_counts
from heteromotif.core.management.base import BaseGraphCommand
from heteromotif.motifs.codec import describe
from heteromotif.motifs.oracle import compare_with_oracle, oracle_global_counts
from heteromotif.motifs.parallel import count_all

# Exit status when the counts don't match the brute force.
VERIFY_FAILED = 1

# Differences listed before the rest are summarized.
MAX_LISTED = 20


class Command(BaseGraphCommand):
    """
    Checks the counts of every edge, and the global counts derived from
    them, against the brute-force oracle. Exits with status 1 and lists
    the differences when anything doesn't match.
    """

    help = "Verifies the motif counts of a small graph by brute force."

    def handle_graph(self, graph, config, options):
        counts = count_all(graph, workers=config.workers, max_k=config.max_k)
        differences = compare_with_oracle(graph, counts, max_k=config.max_k)
        for difference in differences[:MAX_LISTED]:
            self.stderr.write(str(difference))
        if len(differences) > MAX_LISTED:
            self.stderr.write("... and %s more" % (len(differences) - MAX_LISTED))

        global_mismatches = []
        if not differences:
            engine = global_counts(counts)
            oracle = oracle_global_counts(graph, max_k=config.max_k)
            for key in sorted(set(engine) | set(oracle)):
                if engine.get(key) != oracle.get(key):
                    global_mismatches.append(key)
                    self.stderr.write(
                        "global %s: engine=%s oracle=%s"
                        % (describe(key), engine.get(key), oracle.get(key))
                    )

        if differences or global_mismatches:
            raise CommandError(
                "FAIL: %s per-edge and %s global differences"
                % (len(differences), len(global_mismatches)),
                returncode=VERIFY_FAILED,
            )
        self.stdout.write(
            "PASS: %s edges, %s typed orbits match the brute force"
            % (graph.num_edges, len(counts.motifs))
        )
