from heteromotif.analysis.aggregate import global_counts
from heteromotif.conf import settings
from heteromotif.core.management.base import BaseGraphCommand
from heteromotif.motifs.codec import describe
from heteromotif.motifs.parallel import count_all


def global_rows(graph, gc):
    """
    Yields ``(graphlet, types, frequency)`` rows of the global counts,
    with the types given by their labels.
    """
    for key, frequency in gc.items():
        d = describe(key)
        labels = ",".join(graph.type_labels[t - 1] for t in d.types)
        yield d.name, labels, frequency


class Command(BaseGraphCommand):
    """
    Writes the global frequency of every typed graphlet as a TSV table
    with the columns ``graphlet``, ``types`` and ``frequency``, to the
    output directory when one is given, otherwise to stdout.
    """

    help = "Counts the typed graphlets of a whole graph."

    def handle_graph(self, graph, config, options):
        counts = count_all(graph, workers=config.workers, max_k=config.max_k)
        gc = global_counts(counts)
        lines = ["graphlet\ttypes\tfrequency"]
        lines.extend("%s\t%s\t%s" % row for row in global_rows(graph, gc))
        if config.out:
            path = self.out_path(config, settings.GLOBAL_FILE_NAME)
            with open(path, "w", encoding="utf-8") as f:
                f.write("\n".join(lines) + "\n")
            self.log("Wrote %s typed graphlets to %s" % (len(gc), path))
        else:
            for line in lines:
                self.stdout.write(line)
