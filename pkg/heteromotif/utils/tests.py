import os
from tempfile import TemporaryDirectory

from django.test import SimpleTestCase

from heteromotif.graphs.models import HeteroGraph
from heteromotif.motifs.codec import encode


class TestCase(SimpleTestCase):
    """
    This is the base test case providing common features for all tests
    across the different apps in heteromotif: small named graphs,
    key construction and a scratch directory for file output.
    """

    def setUp(self):
        self._tmp = TemporaryDirectory()
        self.tmp_dir = self._tmp.name

    def tearDown(self):
        self._tmp.cleanup()

    def tmp_path(self, name):
        return os.path.join(self.tmp_dir, name)

    def write_file(self, name, content):
        path = self.tmp_path(name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(content)
        return path

    def graph(self, edges, types=None):
        """
        Builds a graph on nodes ``0..n-1`` from ``(u, v)`` pairs, ``n``
        being one more than the largest node id. All nodes get type 1
        unless ``types`` is given.
        """
        n = max(max(edge) for edge in edges) + 1
        if types is None:
            types = [1] * n
        return HeteroGraph.from_edges(n, edges, types)

    def key(self, motif, *types):
        return encode(motif, types)

    def edge_id(self, graph, u, v):
        """
        Id of the edge between ``u`` and ``v``, whichever way round it's
        oriented.
        """
        for edge_id, i, j in graph.edges():
            if {i, j} == {u, v}:
                return edge_id
        raise AssertionError("No edge %s-%s" % (u, v))


# Small graphs used throughout the tests, as edge lists.
TRIANGLE = [(0, 1), (1, 2), (0, 2)]
CLIQUE = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
CYCLE = [(0, 1), (1, 2), (2, 3), (0, 3)]
# 4-cycle 0-1-2-3 with the chord 0-2.
CHORDAL_CYCLE = CYCLE + [(0, 2)]
# Triangle 0-1-2 with the tail 0-3.
TAILED_TRIANGLE = TRIANGLE + [(0, 3)]
PATH = [(0, 1), (1, 2), (2, 3)]
STAR = [(0, 1), (0, 2), (0, 3)]
