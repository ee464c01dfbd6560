import random
import unittest

from hypergraph.hypergraph import Hypergraph
from hypergraph.partition import Partition
from multilevel.coarsening import (
    Hierarchy, coarsen, contract, heavy_edge_matching, random_matching, project,
    LevelOutOfRangeError,
)

from tests.fixtures import h0, grid_graph_hypergraph, random_corpus


class TestContract(unittest.TestCase):

    def test_h0(self):
        coarse = contract(h0(), [0, 1, 2, 2])
        self.assertTupleEqual(coarse.pins_of_net, ((0, 1), (1, 2), (0, 2)))
        self.assertTupleEqual(coarse.vertex_weights, (1, 1, 2))

    def test_single_pin_and_parallel_nets(self):
        coarse = contract(h0(), [0, 0, 1, 1])
        self.assertTupleEqual(coarse.pins_of_net, ((0, 1),))
        self.assertTupleEqual(coarse.net_weights, (2,))
        self.assertEqual(coarse.total_weight, 4)

    def test_projection_keeps_km1(self):
        rng = random.Random(8)
        for hypergraph in random_corpus(31, 20):
            hierarchy = coarsen(hypergraph, 2, rng)
            coarsest = hierarchy.hypergraphs[hierarchy.coarsest]
            blocks = [rng.randrange(3) for _ in range(coarsest.num_vertices)]
            km1 = Partition(coarsest, 3, 0, blocks, allow_empty=True).km1
            for level in range(hierarchy.coarsest, 0, -1):
                blocks = hierarchy.project(level, blocks)
                finer = hierarchy.hypergraphs[level - 1]
                self.assertEqual(Partition(finer, 3, 0, blocks, allow_empty=True).km1, km1)
                self.assertEqual(finer.total_weight, hypergraph.total_weight)


class TestMatching(unittest.TestCase):

    def setUp(self):
        self.hypergraph = Hypergraph(4, [[0, 1], [1, 2], [2, 3]], net_weights=[5, 1, 5])

    def test_heavy_edges_first(self):
        for seed in range(10):
            coarse_of_fine, num_coarse = heavy_edge_matching(self.hypergraph, 2, random.Random(seed))
            self.assertListEqual(coarse_of_fine, [0, 0, 1, 1])
            self.assertEqual(num_coarse, 2)

    def test_weight_cap(self):
        coarse_of_fine, num_coarse = heavy_edge_matching(self.hypergraph, 1, random.Random(0))
        self.assertListEqual(coarse_of_fine, [0, 1, 2, 3])
        self.assertEqual(num_coarse, 4)

    def test_random_matching(self):
        hypergraph = Hypergraph(4, [])
        mate = random_matching(hypergraph, [-1] * 4, 2, random.Random(1))
        for vertex, other in enumerate(mate):
            self.assertGreaterEqual(other, 0)
            self.assertEqual(mate[other], vertex)


class TestCoarsen(unittest.TestCase):

    def test_target_above_size(self):
        hierarchy = coarsen(h0(), 10, random.Random(0))
        self.assertEqual(hierarchy.num_levels, 1)
        self.assertEqual(hierarchy.coarsest, 0)

    def test_grid(self):
        hypergraph = grid_graph_hypergraph(8, 8)
        hierarchy = coarsen(hypergraph, 10, random.Random(4))
        self.assertGreater(hierarchy.num_levels, 1)
        sizes = [level.num_vertices for level in hierarchy.hypergraphs]
        self.assertListEqual(sizes, sorted(sizes, reverse=True))
        self.assertEqual(len(set(sizes)), len(sizes))
        for level in hierarchy.hypergraphs:
            self.assertEqual(level.total_weight, 64)
            self.assertLessEqual(max(level.vertex_weights), 21)

    def test_project(self):
        hierarchy = Hierarchy(h0())
        hierarchy.add_level(contract(h0(), [0, 0, 1, 1]), [0, 0, 1, 1])
        self.assertListEqual(hierarchy.project(1, [1, 0]), [1, 1, 0, 0])
        self.assertListEqual(project([1, 0], [1, 1, 0]), [0, 0, 1])
        with self.assertRaises(LevelOutOfRangeError):
            hierarchy.project(2, [0, 1])
