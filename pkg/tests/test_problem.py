import unittest

from flows.maxflow import max_flow, residual_reachable
from flows.mincut import extract_bipartition
from flows.network import NetworkVariant
from flows.problem import (
    FlowModel, build_flow_problem, build_terminal_problem,
    UnknownModelError, TerminalOverlapError,
)
from flows.refiner import RefinerConfig
from hypergraph.partition import Partition
from hypergraph.subhypergraph import induced_subhypergraph
from utils.errors import ConfigError

from tests.fixtures import h0


class TestHypergraphModel(unittest.TestCase):

    def setUp(self):
        self.hypergraph = h0()
        self.partition = Partition(self.hypergraph, 2, 0.03, [0, 0, 1, 1])
        self.sub = induced_subhypergraph(self.hypergraph, {1, 2}, self.partition, 0, 1)

    def test_structure(self):
        problem = build_flow_problem(self.sub, RefinerConfig())
        self.assertEqual(problem.network.num_nodes, 8)
        self.assertEqual(len(problem.source_arcs), 2)
        self.assertEqual(len(problem.sink_arcs), 1)
        self.assertEqual(problem.attached_nets, {0: (True, False), 1: (False, True), 2: (True, False)})
        self.assertFalse(problem.is_degenerate())

    def test_flow_and_cut(self):
        problem = build_flow_problem(self.sub, RefinerConfig())
        state = max_flow(problem)
        self.assertEqual(state.value, 1)
        self.assertNotIn(problem.network.net_out[1], residual_reachable(problem, state))
        bipartition = extract_bipartition(problem, state)
        self.assertEqual(bipartition.source_side, frozenset({0, 1}))
        self.assertEqual(bipartition.cut_weight, 1)

    def test_bridged_single_pin_nets(self):
        config = RefinerConfig(single_pin_modeling=False, network_variant='lawler')
        problem = build_flow_problem(self.sub, config)
        self.assertEqual(problem.network.num_nodes, 10)
        state = max_flow(problem)
        self.assertEqual(state.value, 1)
        self.assertEqual(extract_bipartition(problem, state).cut_weight, 1)

    def test_current_cut(self):
        problem = build_flow_problem(self.sub, RefinerConfig())
        self.assertEqual(problem.current_source_vertices(), frozenset({0}))
        self.assertEqual(problem.cut_weight(problem.current_source_vertices()), 2)

    def test_whole_vertex_set_is_degenerate(self):
        sub = induced_subhypergraph(self.hypergraph, range(4), self.partition, 0, 1)
        problem = build_flow_problem(sub, RefinerConfig())
        self.assertTrue(problem.is_degenerate())
        self.assertEqual(max_flow(problem).value, 0)

    def test_network_variants_agree(self):
        for variant in NetworkVariant:
            problem = build_flow_problem(self.sub, RefinerConfig(network_variant=variant.value))
            self.assertEqual(max_flow(problem).value, 1)


class TestGraphModel(unittest.TestCase):

    def test_border_vertices_are_fixed(self):
        hypergraph = h0()
        partition = Partition(hypergraph, 2, 0.03, [0, 0, 1, 1])
        sub = induced_subhypergraph(hypergraph, {1, 2}, partition, 0, 1)
        problem = build_flow_problem(sub, RefinerConfig(model='graph'))
        network = problem.network
        self.assertEqual(problem.source_set, frozenset({network.vertex_node[0]}))
        self.assertEqual(problem.sink_set, frozenset({network.vertex_node[1]}))
        state = max_flow(problem)
        self.assertEqual(state.value, 1)
        bipartition = extract_bipartition(problem, state)
        self.assertEqual(bipartition.source_side, frozenset({0}))

    def test_parse(self):
        self.assertEqual(FlowModel.parse('graph'), FlowModel.GRAPH)
        with self.assertRaises(UnknownModelError):
            FlowModel.parse('mixed')
        self.assertTrue(issubclass(UnknownModelError, ConfigError))


class TestTerminalProblem(unittest.TestCase):

    def setUp(self):
        self.sub = induced_subhypergraph(h0(), range(4))

    def test_every_variant(self):
        for variant in NetworkVariant:
            problem = build_terminal_problem(self.sub, variant, {0}, {3})
            state = max_flow(problem)
            self.assertEqual(state.value, 1)
            bipartition = extract_bipartition(problem, state)
            self.assertEqual(bipartition.source_side, frozenset({0, 1, 2}))
            self.assertEqual(bipartition.cut_weight, 1)

    def test_removed_terminal_is_forced(self):
        problem = build_terminal_problem(self.sub, NetworkVariant.REDUCED, {0}, {3})
        self.assertEqual(problem.forced_sink, {3})

    def test_overlap(self):
        with self.assertRaises(TerminalOverlapError):
            build_terminal_problem(self.sub, NetworkVariant.LAWLER, {0, 1}, {1})
