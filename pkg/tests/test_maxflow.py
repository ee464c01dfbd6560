import random
import unittest

import networkx as nx

from flows.maxflow import (
    max_flow, residual_reachable, residual_reaching_sink, cut_capacity,
    TerminalOverlapError, UnboundedFlowError,
)
from flows.network import INFINITE, FlowNetwork, NodeType
from flows.problem import FlowProblem

from tests.fixtures import chain_problem, diamond_problem


class TestMaxFlow(unittest.TestCase):

    def test_chain(self):
        problem, inner = chain_problem([3, 2])
        state = max_flow(problem)
        self.assertEqual(state.value, 2)
        self.assertListEqual(state.flow_per_arc, [2, 2])
        self.assertEqual(residual_reachable(problem, state), frozenset({problem.source, inner[0]}))
        self.assertEqual(residual_reaching_sink(problem, state), frozenset({problem.sink}))

    def test_chain_cut_capacity(self):
        problem, inner = chain_problem([3, 2, 5])
        state = max_flow(problem)
        self.assertEqual(state.value, 2)
        reachable = residual_reachable(problem, state)
        self.assertEqual(cut_capacity(problem, reachable), 2)
        self.assertEqual(reachable, frozenset({problem.source, inner[0]}))

    def test_diamond(self):
        problem, _, _ = diamond_problem()
        state = max_flow(problem)
        self.assertEqual(state.value, 2)
        self.assertEqual(residual_reachable(problem, state), frozenset({problem.source}))

    def test_infinite_arcs(self):
        problem, _ = chain_problem([INFINITE, 4, INFINITE])
        state = max_flow(problem)
        self.assertEqual(state.value, 4)
        self.assertEqual(state.effective_infinity, 5)

    def test_unbounded(self):
        problem, _ = chain_problem([INFINITE, INFINITE])
        with self.assertRaises(UnboundedFlowError):
            max_flow(problem)

    def test_terminal_overlap(self):
        problem, inner = chain_problem([1, 1])
        problem.attach_source(inner[0])
        problem.attach_sink(inner[0])
        with self.assertRaises(TerminalOverlapError):
            max_flow(problem)

    def test_no_path(self):
        network = FlowNetwork()
        problem = FlowProblem(network)
        node = network.add_node(NodeType.VERTEX)
        network.add_arc(problem.source, node, 3)
        state = max_flow(problem)
        self.assertEqual(state.value, 0)
        self.assertEqual(residual_reachable(problem, state), frozenset({problem.source, node}))

    def test_against_networkx(self):
        rng = random.Random(17)
        for _ in range(60):
            num_nodes = rng.randint(2, 10)
            network = FlowNetwork()
            problem = FlowProblem(network)
            inner = [network.add_node(NodeType.VERTEX) for _ in range(num_nodes)]
            nodes = [problem.source, problem.sink] + inner
            graph = nx.DiGraph()
            graph.add_nodes_from(nodes)
            for _ in range(rng.randint(1, 4 * num_nodes)):
                tail, head = rng.sample(nodes, 2)
                if tail == problem.sink or head == problem.source or graph.has_edge(tail, head):
                    continue
                capacity = rng.randint(1, 9)
                network.add_arc(tail, head, capacity)
                graph.add_edge(tail, head, capacity=capacity)
            state = max_flow(problem)
            self.assertEqual(state.value, nx.maximum_flow_value(graph, problem.source, problem.sink))
            reachable = residual_reachable(problem, state)
            self.assertEqual(cut_capacity(problem, reachable), state.value)
            for arc, flow in enumerate(state.flow_per_arc):
                self.assertGreaterEqual(flow, 0)
                self.assertLessEqual(flow, network.arc_capacity[arc])
