'''
Exact maximum flow (blocking flows on level graphs) with residual network queries

Every network arc a becomes the residual edge 2a and its reverse 2a+1. Infinite arcs get
an effective capacity of (sum of finite capacities + 1), which no minimum cut can reach.
'''

from collections import deque
import logging

from utils.errors import HyperflowError, InputError, InvariantViolationError
from .network import INFINITE


logger = logging.getLogger(__name__)


class FlowState:
    '''
    Residual network of a flow problem and the flow routed so far
    '''

    def __init__(self, problem):
        self.problem = problem
        network = problem.network
        finite = sum(capacity for capacity in network.arc_capacity if capacity != INFINITE)
        self.effective_infinity = finite + 1
        self.head = []
        self.residual = []
        self.edges_of_node = [[] for _ in range(network.num_nodes)]
        for tail, head, capacity in network.arcs():
            if capacity == INFINITE:
                capacity = self.effective_infinity
            self.edges_of_node[tail].append(len(self.head))
            self.head.append(head)
            self.residual.append(capacity)
            self.edges_of_node[head].append(len(self.head))
            self.head.append(tail)
            self.residual.append(0)
        self.value = 0
        self.phases = 0

    def __repr__(self):
        return 'FlowState(value={}, phases={})'.format(self.value, self.phases)

    def arc_flow(self, arc):
        '''
        Flow on network arc `arc`
        '''
        return self.residual[2 * arc + 1]

    @property
    def flow_per_arc(self):
        return [self.residual[2 * arc + 1] for arc in range(len(self.head) // 2)]

    def residual_arcs(self):
        '''
        Iterate residual edges (u, v) with positive residual capacity
        '''
        for node, edges in enumerate(self.edges_of_node):
            for edge in edges:
                if self.residual[edge] > 0:
                    yield node, self.head[edge]

    def _levels(self):
        source = self.problem.source
        level = [-1] * len(self.edges_of_node)
        level[source] = 0
        queue = deque([source])
        while queue:
            node = queue.popleft()
            for edge in self.edges_of_node[node]:
                head = self.head[edge]
                if self.residual[edge] > 0 and level[head] < 0:
                    level[head] = level[node] + 1
                    queue.append(head)
        return level

    def _blocking_flow(self, level):
        source, sink = self.problem.source, self.problem.sink
        edges_of_node = self.edges_of_node
        residual = self.residual
        head = self.head
        current = [0] * len(edges_of_node)
        total = 0
        path = []
        node = source
        while True:
            if node == sink:
                bottleneck = min(residual[edge] for edge in path)
                for edge in path:
                    residual[edge] -= bottleneck
                    residual[edge ^ 1] += bottleneck
                total += bottleneck
                path = []
                node = source
                continue
            edges = edges_of_node[node]
            advanced = False
            while current[node] < len(edges):
                edge = edges[current[node]]
                if residual[edge] > 0 and level[head[edge]] == level[node] + 1:
                    path.append(edge)
                    node = head[edge]
                    advanced = True
                    break
                current[node] += 1
            if advanced:
                continue
            if not path:
                return total
            level[node] = -1
            edge = path.pop()
            node = head[edge ^ 1]
            current[node] += 1

    def solve(self):
        '''
        Augment until the sink is unreachable in the residual network
        '''
        sink = self.problem.sink
        while True:
            level = self._levels()
            if level[sink] < 0:
                break
            self.phases += 1
            self.value += self._blocking_flow(level)
        if self.value >= self.effective_infinity:
            raise UnboundedFlowError('Source and sink are joined by a path of infinite capacity')
        return self


def max_flow(problem):
    '''
    Maximum flow from the source node to the sink node of a flow problem
    '''
    overlap = problem.source_set & problem.sink_set
    if overlap:
        raise TerminalOverlapError('Nodes {} are attached to both source and sink'.format(sorted(overlap)))
    state = FlowState(problem).solve()
    logger.debug('Max flow %d after %d phases.', state.value, state.phases)
    return state


def residual_reachable(problem, state):
    '''
    Nodes reachable from the source in the residual network of a maximum flow
    '''
    seen = {problem.source}
    queue = deque([problem.source])
    while queue:
        node = queue.popleft()
        for edge in state.edges_of_node[node]:
            head = state.head[edge]
            if state.residual[edge] > 0 and head not in seen:
                seen.add(head)
                queue.append(head)
    if problem.sink in seen:
        raise NonMaximalFlowError('Sink is reachable in the residual network: flow {} is not maximal'.format(state.value))
    return frozenset(seen)


def residual_reaching_sink(problem, state):
    '''
    Nodes from which the sink is reachable in the residual network
    '''
    seen = {problem.sink}
    queue = deque([problem.sink])
    while queue:
        node = queue.popleft()
        for edge in state.edges_of_node[node]:
            tail = state.head[edge]
            if state.residual[edge ^ 1] > 0 and tail not in seen:
                seen.add(tail)
                queue.append(tail)
    if problem.source in seen:
        raise NonMaximalFlowError('Source reaches the sink in the residual network: flow {} is not maximal'.format(state.value))
    return frozenset(seen)


def cut_capacity(problem, source_nodes):
    '''
    Total capacity of network arcs leaving a node set
    '''
    network = problem.network
    total = 0
    for tail, head, capacity in network.arcs():
        if tail in source_nodes and head not in source_nodes:
            total += capacity
    return total


# pylint: disable=missing-docstring

class MaxFlowError(HyperflowError):
    pass


class TerminalOverlapError(MaxFlowError, InputError):
    pass


class UnboundedFlowError(MaxFlowError, InputError):
    pass


class NonMaximalFlowError(MaxFlowError, InvariantViolationError):
    pass
