from itertools import permutations
from math import comb

from heteromotif.core.exceptions import ContractViolation
from heteromotif.motifs import Graphlet, Orbit, edge_count, node_count
from heteromotif.motifs.codec import (
    TYPES_MASK,
    decimal_hash,
    decode,
    describe,
    encode,
    graphlet_key,
    pack2,
    pack3,
    pack4,
    prefix,
    type_multisets,
)
from heteromotif.utils.tests import TestCase


class KeyTests(TestCase):
    def test_order_independent(self):
        expected = encode(Orbit.FOUR_PATH_CENTER, [1, 2, 3, 4])
        for types in permutations([4, 2, 3, 1]):
            self.assertEqual(encode(Orbit.FOUR_PATH_CENTER, types), expected)
        self.assertEqual(
            encode(Orbit.WEDGE, [2, 1, 1]), encode(Orbit.WEDGE, [1, 2, 1])
        )

    def test_distinct(self):
        self.assertNotEqual(
            encode(Orbit.WEDGE, [1, 1, 2]), encode(Orbit.WEDGE, [1, 2, 2])
        )
        self.assertNotEqual(
            encode(Orbit.FOUR_PATH_EDGE, [1, 1, 2, 2]),
            encode(Orbit.FOUR_PATH_CENTER, [1, 1, 2, 2]),
        )
        self.assertNotEqual(
            encode(Orbit.FOUR_STAR, [1, 1, 1, 1]),
            encode(Graphlet.FOUR_PATH, [1, 1, 1, 1]),
        )

    def test_decode(self):
        self.assertEqual(
            decode(encode(Orbit.TRIANGLE, [3, 1, 2])), (Orbit.TRIANGLE, (1, 2, 3))
        )
        self.assertEqual(
            decode(encode(Graphlet.FOUR_CYCLE, [2, 2, 1, 1])),
            (Graphlet.FOUR_CYCLE, (1, 1, 2, 2)),
        )
        motif, types = decode(encode(Orbit.EDGE, [4095, 1]))
        self.assertIs(motif, Orbit.EDGE)
        self.assertEqual(types, (1, 4095))

    def test_layout(self):
        key = encode(Orbit.FOUR_CLIQUE, [1, 2, 3, 4])
        self.assertEqual(key >> 48, 12)
        self.assertEqual(key & TYPES_MASK, 1 << 36 | 2 << 24 | 3 << 12 | 4)
        self.assertEqual(encode(Orbit.EDGE, [1, 1]), 1 << 36 | 1 << 24)
        self.assertEqual(encode(Graphlet.EDGE, [1, 1]) >> 48, 0x80)

    def test_invalid(self):
        with self.assertRaises(ContractViolation):
            encode(Orbit.TRIANGLE, [1, 2])
        with self.assertRaises(ContractViolation):
            encode(Orbit.EDGE, [0, 1])
        with self.assertRaises(ContractViolation):
            encode(Orbit.EDGE, [1, 4096])
        with self.assertRaises(ContractViolation):
            encode(13, [1, 1, 1, 1])
        with self.assertRaises(ContractViolation):
            decode(-1)
        with self.assertRaises(ContractViolation):
            decode(13 << 48 | 1 << 36)
        # Unsorted type fields.
        with self.assertRaises(ContractViolation):
            decode(2 << 36 | 1 << 24)
        # A 2-node motif with a third type set.
        with self.assertRaises(ContractViolation):
            decode(1 << 36 | 1 << 24 | 1 << 12)

    def test_pack_matches_encode(self):
        for types in permutations([3, 1, 2, 2]):
            self.assertEqual(
                pack4(prefix(Orbit.FOUR_CYCLE), *types),
                encode(Orbit.FOUR_CYCLE, types),
            )
        for types in permutations([3, 1, 2]):
            self.assertEqual(
                pack3(prefix(Orbit.WEDGE), *types), encode(Orbit.WEDGE, types)
            )
        self.assertEqual(pack2(prefix(Orbit.EDGE), 5, 2), encode(Orbit.EDGE, [2, 5]))

    def test_graphlet_key(self):
        key = encode(Orbit.TAILED_TRIANGLE_CENTER, [1, 2, 2, 3])
        rolled = graphlet_key(key)
        self.assertEqual(rolled, encode(Graphlet.TAILED_TRIANGLE, [1, 2, 2, 3]))
        self.assertEqual(graphlet_key(rolled), rolled)
        self.assertEqual(
            graphlet_key(encode(Orbit.FOUR_PATH_EDGE, [1, 1, 1, 1])),
            graphlet_key(encode(Orbit.FOUR_PATH_CENTER, [1, 1, 1, 1])),
        )

    def test_sizes(self):
        self.assertEqual(node_count(Orbit.CHORDAL_CYCLE_EDGE), 4)
        self.assertEqual(node_count(Graphlet.WEDGE), 3)
        self.assertEqual(edge_count(Orbit.CHORDAL_CYCLE_CENTER), 5)
        self.assertEqual(edge_count(Graphlet.FOUR_CLIQUE), 6)


class DescribeTests(TestCase):
    def test_describe(self):
        self.assertEqual(
            str(describe(encode(Orbit.FOUR_CLIQUE, [2, 1, 2, 1]))),
            "4-clique, k=4, |E|=6, types {1,1,2,2}",
        )
        self.assertEqual(
            str(describe(encode(Orbit.EDGE, [2, 1]))), "edge, k=2, |E|=1, types {1,2}"
        )
        self.assertEqual(
            str(describe(encode(Graphlet.FOUR_CYCLE, [1, 2, 1, 2]))),
            "4-cycle, k=4, |E|=4, types {1,1,2,2}",
        )
        description = describe(encode(Orbit.TAILED_TRIANGLE_TAIL_EDGE, [1, 1, 1, 2]))
        self.assertEqual(description.name, "tailed-triangle-tail-edge")
        self.assertEqual((description.k, description.num_edges), (4, 4))

    def test_type_multisets(self):
        self.assertEqual(len(list(type_multisets(3, 4))), 20)
        self.assertEqual(list(type_multisets(2, 2)), [(1, 1), (1, 2), (2, 2)])

    def test_every_orbit_and_multiset(self):
        """
        Keys of every orbit and type multiset with up to 9 types are
        distinct, order independent and decode back exactly.
        """
        all_keys = set()
        for orbit in Orbit:
            k = node_count(orbit)
            for num_types in range(1, 10):
                multisets = list(type_multisets(k, num_types))
                self.assertEqual(len(multisets), comb(num_types + k - 1, k))
                keys = {encode(orbit, types) for types in multisets}
                self.assertEqual(len(keys), len(multisets))
            for types in type_multisets(k, 9):
                key = encode(orbit, types)
                self.assertEqual(decode(key), (orbit, types))
                for shuffled in set(permutations(types)):
                    self.assertEqual(encode(orbit, shuffled), key)
                all_keys.add(key)
        expected = sum(comb(8 + node_count(o), node_count(o)) for o in Orbit)
        self.assertEqual(len(all_keys), expected)


class DecimalHashTests(TestCase):
    def test_narrow(self):
        self.assertEqual(decimal_hash(5, [1, 2, 3, 4]), 51234)
        self.assertEqual(decimal_hash(2, [3, 1]), 23100)
        self.assertEqual(decimal_hash(1, [1, 1, 1]), 11110)
        self.assertEqual(decimal_hash(Orbit.EDGE, [9, 9]), 9900)

    def test_wide(self):
        self.assertEqual(decimal_hash(5, [10, 2, 3, 4], wide=True), 510020304)

    def test_too_many_types(self):
        with self.assertRaisesRegex(ContractViolation, "wide=True"):
            decimal_hash(1, [1, 2, 3], num_types=10)
        with self.assertRaises(ContractViolation):
            decimal_hash(1, [1, 2, 10])
        with self.assertRaises(ContractViolation):
            decimal_hash(1, [1, 2, 3, 4, 5])
