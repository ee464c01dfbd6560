'''
Shared test instances
'''

import random

from flows.network import FlowNetwork, NodeType
from flows.problem import FlowProblem
from hypergraph.hypergraph import Hypergraph


H0_TEXT = '3 4\n1 2\n2 3 4\n1 3\n'


def h0():
    '''
    e1={v1,v2}, e2={v2,v3,v4}, e3={v1,v3} with 0-based ids, unit weights
    '''
    return Hypergraph(4, [[0, 1], [1, 2, 3], [0, 2]])


def random_hypergraph(rng, num_vertices, num_nets, max_net_size=6, max_weight=4, weighted_vertices=False):
    '''
    Random hypergraph; every vertex gets at least one net when num_nets allows
    '''
    pins_of_net = []
    for _ in range(num_nets):
        size = rng.randint(1, min(max_net_size, num_vertices))
        pins_of_net.append(rng.sample(range(num_vertices), size))
    net_weights = [rng.randint(1, max_weight) for _ in range(num_nets)]
    if weighted_vertices:
        vertex_weights = [rng.randint(1, max_weight) for _ in range(num_vertices)]
    else:
        vertex_weights = None
    return Hypergraph(num_vertices, pins_of_net, net_weights, vertex_weights)


def random_corpus(seed, count, max_vertices=12, max_nets=20, max_net_size=6, max_weight=4):
    rng = random.Random(seed)
    corpus = []
    for _ in range(count):
        num_vertices = rng.randint(2, max_vertices)
        num_nets = rng.randint(1, max_nets)
        corpus.append(random_hypergraph(rng, num_vertices, num_nets, max_net_size, max_weight))
    return corpus


def grid_graph_hypergraph(rows, cols):
    '''
    Two-pin nets of a rows x cols grid
    '''
    pins_of_net = []
    for row in range(rows):
        for col in range(cols):
            vertex = row * cols + col
            if col + 1 < cols:
                pins_of_net.append([vertex, vertex + 1])
            if row + 1 < rows:
                pins_of_net.append([vertex, vertex + cols])
    return Hypergraph(rows * cols, pins_of_net)


def chain_problem(capacities):
    '''
    s -> a_1 -> ... -> t with the given arc capacities; returns (problem, inner nodes)
    '''
    network = FlowNetwork()
    problem = FlowProblem(network)
    inner = [network.add_node(NodeType.VERTEX) for _ in range(len(capacities) - 1)]
    path = [problem.source] + inner + [problem.sink]
    for tail, head, capacity in zip(path, path[1:], capacities):
        network.add_arc(tail, head, capacity)
    return problem, inner


def diamond_problem():
    '''
    s -> a, s -> b (capacity 1), a -> t, b -> t (capacity 1): four minimum cuts of value 2
    '''
    network = FlowNetwork()
    problem = FlowProblem(network)
    node_a = network.add_node(NodeType.VERTEX)
    node_b = network.add_node(NodeType.VERTEX)
    network.add_arc(problem.source, node_a, 1)
    network.add_arc(problem.source, node_b, 1)
    network.add_arc(node_a, problem.sink, 1)
    network.add_arc(node_b, problem.sink, 1)
    return problem, node_a, node_b
