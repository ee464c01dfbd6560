import random
import unittest

from hypergraph.partition import Partition
from multilevel.initial import bfs_growing, initial_partition, random_balanced, score, TooManyBlocksError
from utils.errors import InputError

from tests.fixtures import h0, grid_graph_hypergraph


class TestInitialPartition(unittest.TestCase):

    def test_h0_bisection(self):
        partition = initial_partition(h0(), 2, 0, random.Random(0), attempts=32)
        self.assertEqual(partition.km1, 2)
        self.assertTrue(partition.is_balanced())

    def test_singletons(self):
        partition = initial_partition(h0(), 4, 0, random.Random(0), attempts=4)
        self.assertEqual(partition.km1, 4)
        self.assertListEqual(sorted(partition.block_of_vertex), [0, 1, 2, 3])

    def test_single_block(self):
        partition = initial_partition(h0(), 1, 0, random.Random(0), attempts=2)
        self.assertEqual(partition.km1, 0)

    def test_too_many_blocks(self):
        with self.assertRaises(TooManyBlocksError):
            initial_partition(h0(), 5, 0, random.Random(0))
        self.assertTrue(issubclass(TooManyBlocksError, InputError))

    def test_seeded(self):
        hypergraph = grid_graph_hypergraph(5, 5)
        first = initial_partition(hypergraph, 3, '0.1', random.Random(9), attempts=6)
        second = initial_partition(hypergraph, 3, '0.1', random.Random(9), attempts=6)
        self.assertListEqual(first.block_of_vertex, second.block_of_vertex)


class TestMethods(unittest.TestCase):

    def test_random_balanced(self):
        hypergraph = grid_graph_hypergraph(4, 5)
        for seed in range(5):
            blocks = random_balanced(hypergraph, 3, random.Random(seed))
            sizes = [blocks.count(block) for block in range(3)]
            self.assertLessEqual(max(sizes) - min(sizes), 1)

    def test_bfs_growing(self):
        hypergraph = grid_graph_hypergraph(4, 5)
        for seed in range(5):
            blocks = bfs_growing(hypergraph, 4, random.Random(seed))
            self.assertSetEqual(set(blocks), {0, 1, 2, 3})
            sizes = [blocks.count(block) for block in range(4)]
            self.assertListEqual(sizes, [5, 5, 5, 5])

    def test_score_prefers_feasible(self):
        hypergraph = h0()
        feasible = Partition(hypergraph, 2, 0, [0, 1, 0, 1])
        infeasible = Partition(hypergraph, 2, 0, [0, 0, 0, 1])
        self.assertLess(score(feasible), score(infeasible))
        self.assertLess(score(Partition(hypergraph, 2, 0, [0, 0, 1, 1])), score(Partition(hypergraph, 2, 0, [0, 1, 1, 0])))
