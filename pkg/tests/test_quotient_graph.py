import unittest

from hypergraph.hypergraph import Hypergraph
from hypergraph.partition import Partition
from hypergraph.quotient_graph import PairHistory, QuotientGraph, quotient_graph

from tests.fixtures import h0


class TestQuotientGraph(unittest.TestCase):

    def test_bipartition(self):
        hypergraph = h0()
        partition = Partition(hypergraph, 2, 0, [0, 0, 1, 1])
        qgraph = quotient_graph(hypergraph, partition)
        self.assertListEqual(qgraph.pairs(), [(0, 1)])
        self.assertTrue(qgraph.adjacent(1, 0))
        self.assertListEqual(qgraph.active, [True, True])

    def test_uncut(self):
        hypergraph = Hypergraph(4, [[0, 1], [2, 3]])
        partition = Partition(hypergraph, 2, 0, [0, 0, 1, 1])
        self.assertListEqual(quotient_graph(hypergraph, partition).pairs(), [])

    def test_star_gives_complete_graph(self):
        hypergraph = Hypergraph(4, [[0, 1, 2, 3]])
        partition = Partition(hypergraph, 4, 0, [0, 1, 2, 3])
        qgraph = quotient_graph(hypergraph, partition)
        self.assertEqual(len(qgraph.pairs()), 6)

    def test_edges_match_brute_force(self):
        hypergraph = Hypergraph(6, [[0, 1], [1, 2, 3], [4, 5], [3, 4]])
        partition = Partition(hypergraph, 4, 1, [0, 0, 1, 2, 3, 3])
        expected = set()
        for pins in hypergraph.pins_of_net:
            blocks = sorted({partition.block(pin) for pin in pins})
            for idx, block_i in enumerate(blocks):
                for block_j in blocks[idx + 1:]:
                    expected.add((block_i, block_j))
        self.assertSetEqual(set(quotient_graph(hypergraph, partition).pairs()), expected)

    def test_active_pairs(self):
        qgraph = QuotientGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        self.assertEqual(len(qgraph.active_pairs()), 4)
        qgraph.next_round({1, 2})
        self.assertListEqual(qgraph.active_pairs(), [(0, 1), (1, 2), (2, 3)])
        qgraph.next_round(set())
        self.assertFalse(qgraph.has_active_blocks())

    def test_history(self):
        history = PairHistory()
        self.assertFalse(history.improved(2, 1))
        history.record(1, 2)
        history.record(2, 1)
        self.assertTrue(history.improved(1, 2))
        self.assertEqual(history.count(2, 1), 2)
        history.reset()
        self.assertFalse(history.improved(1, 2))
