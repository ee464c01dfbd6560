'''
Hypergraph bipartitions from minimum cuts

extract_bipartition reads the source side off the residual network. Hypernodes elided by the
reduced network are placed on the source side iff the e'' node of one of their nets is
residual-reachable.

most_balanced_min_cut sweeps closed sets of the residual DAG (strongly connected components
contracted) and keeps the closed set whose bipartition is best balanced.
'''

from collections import namedtuple
import logging

import networkx as nx

from utils.errors import HyperflowError, InvariantViolationError
from .maxflow import residual_reachable


logger = logging.getLogger(__name__)


LocalBipartition = namedtuple('LocalBipartition', [
    'source_side',  # frozenset of local vertex ids
    'cut_weight',
])


BalanceContext = namedtuple('BalanceContext', [
    'block_weights',  # full k-way block weights before the corridor is reassigned
    'block_sizes',
    'block_i',
    'block_j',
])


def _source_side(problem, reachable):
    sub = problem.subhypergraph
    network = problem.network
    local = sub.local
    source_side = set()
    for vertex in range(local.num_vertices):
        if vertex in problem.forced_source:
            source_side.add(vertex)
            continue
        if vertex in problem.forced_sink:
            continue
        node = network.vertex_node[vertex]
        if node >= 0:
            if node in reachable:
                source_side.add(vertex)
        elif any(
                network.net_out[net] >= 0 and network.net_out[net] in reachable
                for net in local.nets_of_vertex[vertex]
        ):
            source_side.add(vertex)
    return frozenset(source_side)


def bipartition_of_nodes(problem, source_nodes, flow_value=None):
    '''
    Hypergraph bipartition induced by a source-side node set of a minimum cut
    '''
    source_side = _source_side(problem, source_nodes)
    cut_weight = problem.cut_weight(source_side)
    if flow_value is not None and cut_weight != flow_value:
        raise CutMismatchError('Bipartition cuts {} but the flow value is {}'.format(cut_weight, flow_value))
    return LocalBipartition(source_side, cut_weight)


def extract_bipartition(problem, state):
    '''
    Source side = vertices reachable from the source in the residual network
    '''
    reachable = residual_reachable(problem, state)
    return bipartition_of_nodes(problem, reachable, state.value)


class PQDag:
    '''
    Residual network with strongly connected components contracted

    Closed sets of components that contain s_comp and miss t_comp are exactly the
    source sides of minimum cuts.
    '''

    def __init__(self, problem, state):
        residual = nx.DiGraph()
        residual.add_nodes_from(range(problem.network.num_nodes))
        residual.add_edges_from(state.residual_arcs())
        self.problem = problem
        self.flow_value = state.value
        self.dag = nx.condensation(residual)
        mapping = self.dag.graph['mapping']
        self.component_of = [mapping[node] for node in range(problem.network.num_nodes)]
        self.components = [frozenset(self.dag.nodes[comp]['members']) for comp in range(self.dag.number_of_nodes())]
        self.s_comp = self.component_of[problem.source]
        self.t_comp = self.component_of[problem.sink]
        if self.s_comp == self.t_comp:
            raise NonMaximalFlowError('Source and sink share a strongly connected component')
        if not nx.is_directed_acyclic_graph(self.dag):
            raise CyclicDagError('Contracted residual network has a cycle')
        if self.t_comp in nx.descendants(self.dag, self.s_comp):
            raise NonMaximalFlowError('Sink is reachable in the residual network')

    def __repr__(self):
        return 'PQDag(components={}, arcs={})'.format(len(self.components), self.dag.number_of_edges())

    @property
    def dag_arcs(self):
        return sorted(self.dag.edges())

    def minimal_closed_set(self):
        '''
        Smallest closed set: s_comp and everything it reaches
        '''
        return frozenset(nx.descendants(self.dag, self.s_comp)) | {self.s_comp}

    def is_closed(self, components):
        return all(successor in components for comp in components for successor in self.dag.successors(comp))

    def nodes_of(self, components):
        return frozenset(node for comp in components for node in self.components[comp])

    def random_topological_postorder(self, rng):
        '''
        Reverse topological order from a depth-first search with shuffled roots and arcs
        '''
        dag = self.dag
        roots = list(dag.nodes())
        rng.shuffle(roots)
        visited = set()
        order = []
        for root in roots:
            if root in visited:
                continue
            visited.add(root)
            successors = list(dag.successors(root))
            rng.shuffle(successors)
            stack = [(root, iter(successors))]
            while stack:
                node, children = stack[-1]
                child = next(children, None)
                if child is None:
                    stack.pop()
                    order.append(node)
                elif child not in visited:
                    visited.add(child)
                    grandchildren = list(dag.successors(child))
                    rng.shuffle(grandchildren)
                    stack.append((child, iter(grandchildren)))
        return order


def build_pq_dag(problem, state):
    return PQDag(problem, state)


class _SweepWeights:
    '''
    Source-side weight and size of the corridor while components are added
    '''

    def __init__(self, dag):
        problem = dag.problem
        network = problem.network
        local = problem.subhypergraph.local
        self.local = local
        self.weight_of_component = [0] * len(dag.components)
        self.size_of_component = [0] * len(dag.components)
        self.removed_by_component = {}
        self.representatives = {}
        self.fixed_weight = 0
        self.fixed_size = 0
        for vertex in range(local.num_vertices):
            if vertex in problem.forced_source:
                self.fixed_weight += local.vertex_weights[vertex]
                self.fixed_size += 1
                continue
            if vertex in problem.forced_sink:
                continue
            node = network.vertex_node[vertex]
            if node >= 0:
                comp = dag.component_of[node]
                self.weight_of_component[comp] += local.vertex_weights[vertex]
                self.size_of_component[comp] += 1
                continue
            for net in local.nets_of_vertex[vertex]:
                node = network.net_out[net]
                if node >= 0:
                    self.removed_by_component.setdefault(dag.component_of[node], []).append(vertex)
        self.reset()

    def reset(self):
        self.weight = self.fixed_weight
        self.size = self.fixed_size
        self.hits = {}

    def add(self, comp):
        self.weight += self.weight_of_component[comp]
        self.size += self.size_of_component[comp]
        for vertex in self.removed_by_component.get(comp, ()):
            hits = self.hits.get(vertex, 0)
            if hits == 0:
                self.weight += self.local.vertex_weights[vertex]
                self.size += 1
            self.hits[vertex] = hits + 1


def most_balanced_min_cut(dag, problem, context, reps, rng):
    '''
    Sweep closed sets of the residual DAG in reverse topological order of a randomized DFS,
    `reps` times, and return the bipartition minimizing the heaviest block of the k-way
    partition (first found among equals)
    '''
    sub = problem.subhypergraph
    local = sub.local
    total_weight = local.total_weight
    total_size = local.num_vertices
    corridor_i = sum(local.vertex_weights[v] for v, block in enumerate(sub.local_block) if block == context.block_i)
    corridor_size_i = sum(1 for block in sub.local_block if block == context.block_i)
    base_i = context.block_weights[context.block_i] - corridor_i
    base_j = context.block_weights[context.block_j] - (total_weight - corridor_i)
    size_i = context.block_sizes[context.block_i] - corridor_size_i
    size_j = context.block_sizes[context.block_j] - (total_size - corridor_size_i)
    others = [
        weight for block, weight in enumerate(context.block_weights)
        if block not in (context.block_i, context.block_j)
    ]
    max_other = max(others) if others else 0

    def score(weights):
        if size_i + weights.size == 0 or size_j + total_size - weights.size == 0:
            return None
        return max(max_other, base_i + weights.weight, base_j + total_weight - weights.weight)

    blocked = frozenset(nx.ancestors(dag.dag, dag.t_comp)) | {dag.t_comp}
    initial = dag.minimal_closed_set()
    weights = _SweepWeights(dag)
    best_score = None
    best = None
    for rep in range(reps):
        order = dag.random_topological_postorder(rng)
        weights.reset()
        for comp in initial:
            weights.add(comp)
        candidate = score(weights)
        if candidate is not None and (best_score is None or candidate < best_score):
            best_score, best = candidate, (order, -1)
        for position, comp in enumerate(order):
            if comp in initial or comp in blocked:
                continue
            weights.add(comp)
            candidate = score(weights)
            if candidate is not None and (best_score is None or candidate < best_score):
                best_score, best = candidate, (order, position)
        logger.debug('Sweep %d: best heaviest block %s.', rep, best_score)
    chosen = set(initial)
    if best is not None:
        order, last = best
        chosen.update(comp for comp in order[:last + 1] if comp not in blocked)
    if not dag.is_closed(chosen):
        raise NotClosedError('Chosen component set has outgoing DAG arcs')
    return bipartition_of_nodes(problem, dag.nodes_of(chosen), dag.flow_value)


# pylint: disable=missing-docstring

class MinCutError(HyperflowError):
    pass


class CutMismatchError(MinCutError, InvariantViolationError):
    pass


class NonMaximalFlowError(MinCutError, InvariantViolationError):
    pass


class CyclicDagError(MinCutError, InvariantViolationError):
    pass


class NotClosedError(MinCutError, InvariantViolationError):
    pass
