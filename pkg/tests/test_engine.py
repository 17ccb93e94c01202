from unittest import mock

import networkx as nx

from heteromotif.core.exceptions import ContractViolation, InternalConsistencyError
from heteromotif.motifs import Orbit, node_count
from heteromotif.motifs.engine import (
    MAX_COUNT,
    EdgeLocalCounts,
    ScratchState,
    classify_neighbors,
    count_edge,
)
from heteromotif.motifs.parallel import MotifCounts, count_all, edge_ranges
from heteromotif.synth.generators import assign_types_uniform, gen_er
from heteromotif.utils.tests import (
    CHORDAL_CYCLE,
    CLIQUE,
    CYCLE,
    PATH,
    STAR,
    TAILED_TRIANGLE,
    TRIANGLE,
    TestCase,
)


class EngineTestCase(TestCase):
    def counts(self, graph, u, v, max_k=4):
        """
        Counts of the edge between ``u`` and ``v`` as a plain dict.
        """
        edge_id = self.edge_id(graph, u, v)
        scratch = ScratchState(graph)
        out = count_edge(
            graph, graph.edge_endpoints(edge_id), scratch, max_k=max_k, edge_id=edge_id
        )
        self.assertTrue(scratch.is_clean())
        return out.counts

    def orbit_totals(self, counts):
        totals = {}
        for key, count in counts.items():
            orbit = Orbit(key >> 48)
            totals[orbit] = totals.get(orbit, 0) + count
        return totals


def total(totals, *orbits):
    return sum(totals.get(o, 0) for o in orbits)


class SmallGraphTests(EngineTestCase):
    def test_triangle(self):
        g = self.graph(TRIANGLE)
        for u, v in TRIANGLE:
            self.assertEqual(
                self.counts(g, u, v),
                {
                    self.key(Orbit.EDGE, 1, 1): 1,
                    self.key(Orbit.TRIANGLE, 1, 1, 1): 1,
                },
            )

    def test_clique(self):
        g = self.graph(CLIQUE)
        for u, v in CLIQUE:
            self.assertEqual(
                self.counts(g, u, v),
                {
                    self.key(Orbit.EDGE, 1, 1): 1,
                    self.key(Orbit.TRIANGLE, 1, 1, 1): 2,
                    self.key(Orbit.FOUR_CLIQUE, 1, 1, 1, 1): 1,
                },
            )

    def test_typed_clique(self):
        g = self.graph(CLIQUE, types=[1, 1, 2, 2])
        self.assertEqual(
            self.counts(g, 0, 1),
            {
                self.key(Orbit.EDGE, 1, 1): 1,
                self.key(Orbit.TRIANGLE, 1, 1, 2): 2,
                self.key(Orbit.FOUR_CLIQUE, 1, 1, 2, 2): 1,
            },
        )
        self.assertEqual(
            self.counts(g, 0, 2),
            {
                self.key(Orbit.EDGE, 1, 2): 1,
                self.key(Orbit.TRIANGLE, 1, 1, 2): 1,
                self.key(Orbit.TRIANGLE, 1, 2, 2): 1,
                self.key(Orbit.FOUR_CLIQUE, 1, 1, 2, 2): 1,
            },
        )

    def test_cycle(self):
        g = self.graph(CYCLE)
        self.assertEqual(
            self.counts(g, 0, 1),
            {
                self.key(Orbit.EDGE, 1, 1): 1,
                self.key(Orbit.WEDGE, 1, 1, 1): 2,
                self.key(Orbit.FOUR_CYCLE, 1, 1, 1, 1): 1,
            },
        )

    def test_path(self):
        g = self.graph(PATH, types=[1, 2, 3, 4])
        self.assertEqual(
            self.counts(g, 0, 1),
            {
                self.key(Orbit.EDGE, 1, 2): 1,
                self.key(Orbit.WEDGE, 1, 2, 3): 1,
                self.key(Orbit.FOUR_PATH_EDGE, 1, 2, 3, 4): 1,
            },
        )
        self.assertEqual(
            self.counts(g, 1, 2),
            {
                self.key(Orbit.EDGE, 2, 3): 1,
                self.key(Orbit.WEDGE, 1, 2, 3): 1,
                self.key(Orbit.WEDGE, 2, 3, 4): 1,
                self.key(Orbit.FOUR_PATH_CENTER, 1, 2, 3, 4): 1,
            },
        )

    def test_star(self):
        g = self.graph(STAR)
        self.assertEqual(
            self.counts(g, 0, 1),
            {
                self.key(Orbit.EDGE, 1, 1): 1,
                self.key(Orbit.WEDGE, 1, 1, 1): 2,
                self.key(Orbit.FOUR_STAR, 1, 1, 1, 1): 1,
            },
        )

    def test_chordal_cycle(self):
        g = self.graph(CHORDAL_CYCLE)
        self.assertEqual(
            self.counts(g, 0, 2),
            {
                self.key(Orbit.EDGE, 1, 1): 1,
                self.key(Orbit.TRIANGLE, 1, 1, 1): 2,
                self.key(Orbit.CHORDAL_CYCLE_CENTER, 1, 1, 1, 1): 1,
            },
        )
        for u, v in CYCLE:
            self.assertEqual(
                self.counts(g, u, v),
                {
                    self.key(Orbit.EDGE, 1, 1): 1,
                    self.key(Orbit.TRIANGLE, 1, 1, 1): 1,
                    self.key(Orbit.WEDGE, 1, 1, 1): 1,
                    self.key(Orbit.CHORDAL_CYCLE_EDGE, 1, 1, 1, 1): 1,
                },
            )

    def test_tailed_triangle(self):
        g = self.graph(TAILED_TRIANGLE)
        self.assertEqual(
            self.counts(g, 0, 3),
            {
                self.key(Orbit.EDGE, 1, 1): 1,
                self.key(Orbit.WEDGE, 1, 1, 1): 2,
                self.key(Orbit.TAILED_TRIANGLE_TAIL_EDGE, 1, 1, 1, 1): 1,
            },
        )
        for u, v in ((0, 1), (0, 2)):
            self.assertEqual(
                self.counts(g, u, v),
                {
                    self.key(Orbit.EDGE, 1, 1): 1,
                    self.key(Orbit.TRIANGLE, 1, 1, 1): 1,
                    self.key(Orbit.WEDGE, 1, 1, 1): 1,
                    self.key(Orbit.TAILED_TRIANGLE_TRI_EDGE, 1, 1, 1, 1): 1,
                },
            )
        self.assertEqual(
            self.counts(g, 1, 2),
            {
                self.key(Orbit.EDGE, 1, 1): 1,
                self.key(Orbit.TRIANGLE, 1, 1, 1): 1,
                self.key(Orbit.TAILED_TRIANGLE_CENTER, 1, 1, 1, 1): 1,
            },
        )

    def test_max_k_3(self):
        g = self.graph(CLIQUE)
        counts = self.counts(g, 0, 1, max_k=3)
        self.assertEqual(
            counts,
            {
                self.key(Orbit.EDGE, 1, 1): 1,
                self.key(Orbit.TRIANGLE, 1, 1, 1): 2,
            },
        )

    def test_orientation_independent(self):
        g = self.graph(TAILED_TRIANGLE, types=[1, 2, 2, 3])
        for edge_id, i, j in g.edges():
            forward = count_edge(g, (i, j), ScratchState(g), edge_id=edge_id)
            backward = count_edge(g, (j, i), ScratchState(g), edge_id=edge_id)
            self.assertEqual(forward, backward)


class InvariantTests(EngineTestCase):
    def random_graphs(self):
        for seed in range(5):
            for num_types in (1, 2, 4):
                g = gen_er(40, 0.15, seed=seed)
                yield assign_types_uniform(g, num_types, seed=seed)

    def test_neighborhood_partition(self):
        for g in self.random_graphs():
            scratch = ScratchState(g)
            for edge_id, i, j in g.edges():
                out = EdgeLocalCounts(edge_id)
                classify_neighbors(g, (i, j), scratch, out)
                t, si, sj = (
                    len(scratch.t_list),
                    len(scratch.si_list),
                    len(scratch.sj_list),
                )
                self.assertEqual(g.degree(i) + g.degree(j), 2 * t + si + sj + 2)
                self.assertEqual(set(scratch.t_list) & set(scratch.si_list), set())
                self.assertEqual(set(scratch.t_list) & set(scratch.sj_list), set())
                self.assertEqual(set(scratch.si_list) & set(scratch.sj_list), set())
                self.assertEqual(sum(scratch.t_cnt), t)
                self.assertEqual(sum(scratch.si_cnt), si)
                self.assertEqual(sum(scratch.sj_cnt), sj)
                totals = self.orbit_totals(out.counts)
                self.assertEqual(totals.get(Orbit.TRIANGLE, 0), t)
                self.assertEqual(totals.get(Orbit.WEDGE, 0), si + sj)
                self.assertEqual(totals[Orbit.EDGE], 1)
                scratch.reset()
                self.assertTrue(scratch.is_clean())

    def test_pair_identities(self):
        # Node pairs drawn from the edge's sets fall into exactly one
        # 4-node orbit each, however they're connected.
        for g in self.random_graphs():
            scratch = ScratchState(g)
            for edge_id, i, j in g.edges():
                counts = count_edge(g, (i, j), scratch, edge_id=edge_id).counts
                totals = self.orbit_totals(counts)
                t = totals.get(Orbit.TRIANGLE, 0)
                s = totals.get(Orbit.WEDGE, 0)
                deg_i, deg_j = g.degree(i) - 1, g.degree(j) - 1
                si, sj = deg_i - t, deg_j - t

                self.assertEqual(
                    total(totals, Orbit.FOUR_CLIQUE, Orbit.CHORDAL_CYCLE_CENTER),
                    t * (t - 1) // 2,
                )
                self.assertEqual(
                    total(
                        totals,
                        Orbit.CHORDAL_CYCLE_EDGE,
                        Orbit.TAILED_TRIANGLE_TRI_EDGE,
                    ),
                    t * s,
                )
                self.assertEqual(
                    total(totals, Orbit.FOUR_CYCLE, Orbit.FOUR_PATH_CENTER), si * sj
                )
                self.assertEqual(
                    total(totals, Orbit.TAILED_TRIANGLE_TAIL_EDGE, Orbit.FOUR_STAR),
                    si * (si - 1) // 2 + sj * (sj - 1) // 2,
                )

    def test_untyped_triangles(self):
        g = gen_er(60, 0.2, seed=11)
        counts = count_all(g)
        key = self.key(Orbit.TRIANGLE, 1, 1, 1)
        expected = sum(nx.triangles(nx.Graph(g.edge_list.tolist())).values())
        self.assertEqual(counts.total(key), expected)

    def test_collapse_sums_types(self):
        typed = assign_types_uniform(gen_er(40, 0.2, seed=5), 3, seed=5)
        plain = typed.collapse_types()
        typed_counts = count_all(typed)
        plain_counts = count_all(plain)
        for edge_id in range(typed.num_edges):
            collapsed = {}
            for key, count in typed_counts[edge_id].counts.items():
                orbit = Orbit(key >> 48)
                plain_key = self.key(orbit, *([1] * node_count(orbit)))
                collapsed[plain_key] = collapsed.get(plain_key, 0) + count
            self.assertEqual(collapsed, plain_counts[edge_id].counts)

    def test_no_zero_counts(self):
        for g in self.random_graphs():
            for counts in count_all(g):
                self.assertTrue(all(c > 0 for c in counts.counts.values()))

    def test_scratch_reset_on_error(self):
        g = self.graph(CLIQUE)
        scratch = ScratchState(g)
        with mock.patch(
            "heteromotif.motifs.engine.derive_constant_time",
            side_effect=InternalConsistencyError("boom"),
        ):
            with self.assertRaises(InternalConsistencyError):
                count_edge(g, g.edge_endpoints(0), scratch)
        self.assertTrue(scratch.is_clean())

    def test_negative_derivation(self):
        g = self.graph(CLIQUE)
        scratch = ScratchState(g)
        extra = self.key(Orbit.FOUR_CLIQUE, 1, 1, 1, 1)

        def too_many_cliques(graph, edge, scratch, out):
            out.update(extra, 5)
            return out

        with mock.patch(
            "heteromotif.motifs.engine.count_triangle_based",
            side_effect=too_many_cliques,
        ):
            with self.assertRaisesRegex(InternalConsistencyError, "negative"):
                count_edge(g, g.edge_endpoints(0), scratch)
        self.assertTrue(scratch.is_clean())


class EdgeLocalCountsTests(TestCase):
    def test_sparse(self):
        counts = EdgeLocalCounts(3)
        counts.update(10)
        counts.update(10)
        counts.update(5, 4)
        self.assertEqual(counts.get(10), 2)
        self.assertEqual(counts.get(99), 0)
        self.assertEqual(counts.keys(), [5, 10])
        self.assertEqual(counts.pairs(), ((5, 4), (10, 2)))
        self.assertEqual(len(counts), 2)
        self.assertEqual(counts, EdgeLocalCounts(3, {5: 4, 10: 2}))
        self.assertNotEqual(counts, EdgeLocalCounts(4, {5: 4, 10: 2}))

    def test_overflow(self):
        counts = EdgeLocalCounts(0, {1: MAX_COUNT + 1})
        with self.assertRaises(InternalConsistencyError):
            counts.pairs()


class ParallelTests(TestCase):
    def test_edge_ranges(self):
        self.assertEqual(edge_ranges(5, 2), [(0, 2), (2, 4), (4, 5)])
        self.assertEqual(edge_ranges(4, 10), [(0, 4)])

    def test_counts_every_edge(self):
        g = self.graph(TAILED_TRIANGLE)
        counts = count_all(g, workers=1, chunk_size=1)
        self.assertIsInstance(counts, MotifCounts)
        self.assertEqual(len(counts), g.num_edges)
        self.assertEqual([c.edge_id for c in counts], list(range(g.num_edges)))
        self.assertEqual(counts.total(self.key(Orbit.EDGE, 1, 1)), 4)
        self.assertEqual(counts.total(self.key(Orbit.TRIANGLE, 1, 1, 1)), 3)
        self.assertEqual(list(counts.motifs), sorted(counts.motifs))

    def test_worker_count_independent(self):
        g = assign_types_uniform(gen_er(80, 0.1, seed=4), 3, seed=4)
        serial = count_all(g, workers=1)
        parallel = count_all(g, workers=2, chunk_size=16)
        self.assertEqual(serial.edges, parallel.edges)
        self.assertEqual(serial.motifs, parallel.motifs)
        self.assertEqual(parallel.workers, 2)

    def test_chunking_independent(self):
        g = assign_types_uniform(gen_er(50, 0.15, seed=8), 2, seed=8)
        self.assertEqual(
            count_all(g, chunk_size=1).edges, count_all(g, chunk_size=1000).edges
        )

    def test_logs_timing(self):
        with self.assertLogs("heteromotif.motifs.parallel", level="INFO") as logs:
            count_all(self.graph(TRIANGLE))
        self.assertIn("Counted 3 edges", logs.output[0])

    def test_settings_defaults(self):
        with self.settings(MOTIFS_MAX_K=3):
            counts = count_all(self.graph(CLIQUE))
        self.assertEqual(counts.max_k, 3)
        self.assertNotIn(self.key(Orbit.FOUR_CLIQUE, 1, 1, 1, 1), counts.motifs)

    def test_invalid(self):
        g = self.graph(TRIANGLE)
        with self.assertRaises(ContractViolation):
            count_all(g, workers=0)
        with self.assertRaises(ContractViolation):
            count_all(g, chunk_size=0)
        with self.assertRaises(ContractViolation):
            count_all(g, max_k=5)
