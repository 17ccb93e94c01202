from collections import Counter

import networkx as nx

from heteromotif.core.exceptions import ContractViolation, GraphFormatError
from heteromotif.synth.generators import (
    GenSpec,
    assign_types_uniform,
    from_networkx,
    gen_chung_lu,
    gen_er,
    power_law_weights,
)
from heteromotif.utils.tests import TestCase


class ErdosRenyiTests(TestCase):
    def test_edge_count(self):
        g = gen_er(100, 0.1, seed=0)
        self.assertEqual(g.num_nodes, 100)
        self.assertLess(abs(g.num_edges - 495), 84)
        self.assertEqual(g.num_node_types, 1)

    def test_complete(self):
        self.assertEqual(gen_er(5, 1.0, seed=0).num_edges, 10)

    def test_seeded(self):
        self.assertEqual(gen_er(50, 0.1, seed=3), gen_er(50, 0.1, seed=3))
        self.assertNotEqual(gen_er(50, 0.1, seed=3), gen_er(50, 0.1, seed=4))

    def test_invalid(self):
        with self.assertRaises(GraphFormatError):
            gen_er(10, 0.0, seed=0)
        with self.assertRaises(ContractViolation):
            gen_er(1, 0.5)
        with self.assertRaises(ContractViolation):
            gen_er(10, 1.5)

    def test_from_networkx(self):
        g = from_networkx(nx.path_graph(4))
        self.assertEqual((g.num_nodes, g.num_edges), (4, 3))


class ChungLuTests(TestCase):
    def test_uniform_weights(self):
        g = gen_chung_lu(200, weights=[10] * 200, seed=0)
        self.assertLess(abs(g.num_edges - 995), 123)

    def test_certain_edge(self):
        self.assertEqual(gen_chung_lu(2, weights=[5, 5], seed=0).num_edges, 1)

    def test_power_law(self):
        weights = power_law_weights(2000, 1.8, 10)
        self.assertAlmostEqual(weights.mean(), 10)
        self.assertTrue(all(weights[:-1] >= weights[1:]))
        g = gen_chung_lu(2000, exponent=1.8, avg_degree=10, seed=0)
        mean = 2 * g.num_edges / g.num_nodes
        self.assertGreater(g.max_degree(), 5 * mean)

    def test_invalid(self):
        with self.assertRaises(ContractViolation):
            gen_chung_lu(10)
        with self.assertRaises(ContractViolation):
            gen_chung_lu(3, weights=[1, 1])
        with self.assertRaises(ContractViolation):
            gen_chung_lu(2, weights=[1, 0])
        with self.assertRaises(ContractViolation):
            power_law_weights(10, 1.0, 5)


class TypeAssignmentTests(TestCase):
    def test_balanced(self):
        g = gen_er(10, 0.5, seed=1)
        sizes = Counter(assign_types_uniform(g, 3, seed=1).type_list)
        self.assertEqual(sorted(sizes.items()), [(1, 4), (2, 3), (3, 3)])
        sizes = Counter(assign_types_uniform(g, 5, seed=1).type_list)
        self.assertEqual(set(sizes.values()), {2})

    def test_seeded(self):
        g = gen_er(30, 0.2, seed=1)
        self.assertEqual(
            assign_types_uniform(g, 3, seed=7).type_list,
            assign_types_uniform(g, 3, seed=7).type_list,
        )
        typed = assign_types_uniform(g, 3, seed=7)
        self.assertEqual(typed.edge_list.tolist(), g.edge_list.tolist())

    def test_invalid(self):
        g = gen_er(5, 1.0, seed=0)
        with self.assertRaises(ContractViolation):
            assign_types_uniform(g, 0)
        with self.assertRaises(ContractViolation):
            assign_types_uniform(g, 6)


class GenSpecTests(TestCase):
    def test_er_from_avg_degree(self):
        spec = GenSpec(model="er", n=101, avg_degree=10, num_types=2, seed=0)
        self.assertAlmostEqual(spec.p, 0.1)
        g = spec.build()
        self.assertEqual((g.num_nodes, g.num_node_types), (101, 2))
        self.assertEqual(spec.build(), g)

    def test_cl(self):
        g = GenSpec(model="cl", n=300, exponent=2.5, avg_degree=6, seed=2).build()
        self.assertEqual(g.num_nodes, 300)

    def test_invalid(self):
        with self.assertRaises(ContractViolation):
            GenSpec(model="ba", n=10, p=0.1)
        with self.assertRaises(ContractViolation):
            GenSpec(model="er", n=1, p=0.1)
        with self.assertRaises(ContractViolation):
            GenSpec(model="er", n=10)
        with self.assertRaises(ContractViolation):
            GenSpec(model="er", n=10, p=0.1, num_types=0)
