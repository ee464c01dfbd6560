import random
import unittest

from hypergraph.hypergraph import Hypergraph
from hypergraph.metrics import (
    connectivity, km1_metric, cut_metric, imbalance, is_balanced, block_weights,
    InvalidNetError,
)
from hypergraph.partition import Partition, partition_from_blocks

from tests.fixtures import h0, random_hypergraph


class TestMetrics(unittest.TestCase):

    def setUp(self):
        self.hypergraph = h0()
        self.partition = Partition(self.hypergraph, 2, 0.03, [0, 0, 1, 1])

    def test_connectivity(self):
        self.assertTupleEqual(connectivity(self.hypergraph, self.partition, 1), (2, frozenset({0, 1})))
        self.assertTupleEqual(connectivity(self.hypergraph, self.partition, 0), (1, frozenset({0})))

    def test_connectivity_single_block(self):
        single = Partition(self.hypergraph, 1, 0, [0, 0, 0, 0])
        for net in range(3):
            self.assertEqual(connectivity(self.hypergraph, single, net)[0], 1)

    def test_connectivity_invalid_net(self):
        with self.assertRaises(InvalidNetError):
            connectivity(self.hypergraph, self.partition, 3)

    def test_km1(self):
        self.assertEqual(km1_metric(self.hypergraph, self.partition), 2)
        other = Partition(self.hypergraph, 2, 1, [0, 1, 1, 1])
        self.assertEqual(km1_metric(self.hypergraph, other), 2)
        single = Partition(self.hypergraph, 1, 0, [0, 0, 0, 0])
        self.assertEqual(km1_metric(self.hypergraph, single), 0)

    def test_cut(self):
        self.assertEqual(cut_metric(self.hypergraph, self.partition), 2)
        single = Partition(self.hypergraph, 1, 0, [0, 0, 0, 0])
        self.assertEqual(cut_metric(self.hypergraph, single), 0)

    def test_cut_equals_km1_for_bipartitions(self):
        rng = random.Random(7)
        for _ in range(50):
            hypergraph = random_hypergraph(rng, 10, 15)
            blocks = [rng.randint(0, 1) for _ in range(10)]
            blocks[0], blocks[1] = 0, 1
            partition = Partition(hypergraph, 2, 1, blocks)
            self.assertEqual(km1_metric(hypergraph, partition), cut_metric(hypergraph, partition))

    def test_km1_bounded_by_cut(self):
        rng = random.Random(8)
        for _ in range(50):
            hypergraph = random_hypergraph(rng, 12, 20)
            blocks = [vertex % 4 for vertex in range(12)]
            rng.shuffle(blocks)
            partition = Partition(hypergraph, 4, 1, blocks)
            self.assertLessEqual(km1_metric(hypergraph, partition), 3 * cut_metric(hypergraph, partition))

    def test_imbalance(self):
        self.assertEqual(imbalance(self.hypergraph, self.partition), 0)
        uneven = Partition(self.hypergraph, 2, 1, [0, 0, 0, 1])
        self.assertAlmostEqual(imbalance(self.hypergraph, uneven), 0.5)

    def test_imbalance_of_empty_hypergraph(self):
        hypergraph = Hypergraph(0, [])
        partition = Partition(hypergraph, 2, 0.03, [])
        self.assertEqual(imbalance(hypergraph, partition), 0.0)

    def test_balance_bound_is_exact(self):
        hypergraph = random_hypergraph(random.Random(1), 100, 10)
        blocks = [0] * 35 + [1] * 33 + [2] * 32
        partition = partition_from_blocks(
            hypergraph, 3, 0.03, [range(0, 35), range(35, 68), range(68, 100)],
        )
        self.assertListEqual(block_weights(hypergraph, partition), [35, 33, 32])
        self.assertTrue(is_balanced(hypergraph, partition, 0.03))
        self.assertEqual(partition.block_of_vertex, blocks)
        heavier = partition_from_blocks(
            hypergraph, 3, 0.03, [range(0, 36), range(36, 68), range(68, 100)],
        )
        self.assertFalse(is_balanced(hypergraph, heavier, 0.03))
