"""
Checks against real datasets and timing runs, skipped unless enabled.

Set ``HETEROMOTIF_DATA`` to a directory holding ``cora/`` and
``retweet/``, each with an ``edges.txt`` and a ``types.txt``, and
``HETEROMOTIF_BENCH`` to anything to run the timing tests.
"""

import os
from unittest import skipUnless

from heteromotif.analysis.aggregate import (
    edge_key_stats,
    global_counts,
    homophily_share,
    typed_distribution,
    unique_counts_summary,
    untyped_counts,
)
from heteromotif.graphs.loaders import load_edge_list
from heteromotif.motifs import Graphlet
from heteromotif.motifs.codec import encode, type_multisets
from heteromotif.motifs.parallel import count_all
from heteromotif.synth.generators import GenSpec
from heteromotif.utils.tests import TestCase

DATA_DIR = os.environ.get("HETEROMOTIF_DATA", "")
BENCH = bool(os.environ.get("HETEROMOTIF_BENCH"))


def dataset(name):
    path = os.path.join(DATA_DIR, name)
    return skipUnless(os.path.isdir(path), "Dataset %s not available" % name)


def load(name):
    path = os.path.join(DATA_DIR, name)
    return load_edge_list(
        os.path.join(path, "edges.txt"), os.path.join(path, "types.txt")
    )


class DatasetTests(TestCase):
    @dataset("cora")
    def test_cora(self):
        graph = load("cora")
        self.assertEqual((graph.num_nodes, graph.num_edges), (2708, 5429))
        self.assertEqual((graph.num_node_types, graph.max_degree()), (7, 168))
        counts = count_all(graph, workers=os.cpu_count() or 1)
        gc = global_counts(counts)
        summaries = {s.graphlet: s for s in unique_counts_summary(gc)}
        triangle = summaries[Graphlet.TRIANGLE]
        self.assertEqual((triangle.observed, triangle.possible), (49, 84))
        clique = summaries[Graphlet.FOUR_CLIQUE]
        self.assertEqual((clique.observed, clique.possible), (19, 210))
        most, mean = edge_key_stats(counts)
        self.assertEqual(most, 82)
        self.assertLess(abs(mean - 17), 1)

    @dataset("retweet")
    def test_retweet(self):
        graph = load("retweet")
        self.assertEqual(graph.num_node_types, 2)
        gc = global_counts(count_all(graph, workers=os.cpu_count() or 1, max_k=3))
        self.assertEqual(untyped_counts(gc)[Graphlet.TRIANGLE], 24815)
        distribution = typed_distribution(gc, Graphlet.TRIANGLE)
        p = dict(zip(distribution.support, distribution.p.tolist()))
        observed = [
            p.get(encode(Graphlet.TRIANGLE, types), 0.0)
            for types in type_multisets(3, 2)
        ]
        for share, expected in zip(observed, [0.608, 0.003, 0.001, 0.388]):
            self.assertAlmostEqual(share, expected, delta=0.001)
        self.assertAlmostEqual(
            homophily_share(gc, Graphlet.TRIANGLE), 0.9965, delta=0.0005
        )


def er_graph(n, seed=0):
    return GenSpec(model="er", n=n, avg_degree=10, num_types=5, seed=seed).build()


@skipUnless(BENCH, "Set HETEROMOTIF_BENCH to run the timing tests")
class BenchmarkTests(TestCase):
    @skipUnless((os.cpu_count() or 1) >= 4, "Needs at least 4 CPUs")
    def test_speedup(self):
        graph = er_graph(100000)
        serial = count_all(graph, workers=1)
        parallel = count_all(graph, workers=4)
        self.assertEqual(serial.edges, parallel.edges)
        self.assertGreaterEqual(serial.elapsed / parallel.elapsed, 2.5)

    def test_linear_in_edges(self):
        """
        Serial time grows linearly in M at fixed average degree, within
        a factor of 1.5 of a fit through the origin.
        """
        sizes, times = [], []
        for n in (1000, 10000, 100000):
            graph = er_graph(n)
            sizes.append(graph.num_edges)
            times.append(count_all(graph, workers=1).elapsed)
        slope = sum(m * t for m, t in zip(sizes, times)) / sum(m * m for m in sizes)
        for m, t in zip(sizes, times):
            ratio = t / (slope * m)
            self.assertTrue(1 / 1.5 <= ratio <= 1.5, "M=%s ratio %.2f" % (m, ratio))
