'''
k-way partition with incrementally maintained pin counts, connectivity and objectives
'''

import logging

from utils.errors import HyperflowError, InputError
from utils.utils import ceil_div, to_fraction


logger = logging.getLogger(__name__)


class Partition:
    '''
    k-way partition of a hypergraph

    l_max = (1 + epsilon) * ceil(c(V) / k), kept as an exact fraction so that the
    balance test on integer block weights is exact.
    '''

    def __init__(self, hypergraph, k, epsilon, block_of_vertex, allow_empty=False):
        if k < 1:
            raise InvalidPartitionError('Invalid number of blocks: {}'.format(k))
        if len(block_of_vertex) != hypergraph.num_vertices:
            raise InvalidPartitionError('Expected {} block ids, got {}'.format(hypergraph.num_vertices, len(block_of_vertex)))
        self.hypergraph = hypergraph
        self.k = k
        self.epsilon = to_fraction(epsilon)
        if self.epsilon < 0:
            raise InvalidPartitionError('Negative epsilon: {}'.format(epsilon))
        self.perfect_weight = ceil_div(hypergraph.total_weight, k)
        self.l_max = (1 + self.epsilon) * self.perfect_weight
        self.block_of_vertex = list(block_of_vertex)
        self.block_weights = [0] * k
        for vertex, block in enumerate(self.block_of_vertex):
            if block < 0 or block >= k:
                raise BlockOutOfRangeError('Vertex {} has block {} out of range [0,{})'.format(vertex, block, k))
            self.block_weights[block] += hypergraph.vertex_weights[vertex]
        self.block_sizes = [0] * k
        for block in self.block_of_vertex:
            self.block_sizes[block] += 1
        if not allow_empty and hypergraph.num_vertices >= k and 0 in self.block_sizes:
            raise EmptyBlockError('Block {} is empty'.format(self.block_sizes.index(0)))
        self._pin_counts = []
        self._connectivity = []
        self._touched = []
        self.km1 = 0
        self.cut = 0
        for net, pins in enumerate(hypergraph.pins_of_net):
            counts = [0] * k
            for pin in pins:
                counts[self.block_of_vertex[pin]] += 1
            lambda_e = sum(1 for count in counts if count)
            self._pin_counts.append(counts)
            self._connectivity.append(lambda_e)
            self._touched.append({block for block, count in enumerate(counts) if count})
            if lambda_e > 1:
                self.km1 += (lambda_e - 1) * hypergraph.net_weights[net]
                self.cut += hypergraph.net_weights[net]

    def __repr__(self):
        return 'Partition(k={}, km1={}, weights={})'.format(self.k, self.km1, self.block_weights)

    def copy(self):
        '''
        Independent copy
        '''
        other = Partition.__new__(Partition)
        other.hypergraph = self.hypergraph
        other.k = self.k
        other.epsilon = self.epsilon
        other.perfect_weight = self.perfect_weight
        other.l_max = self.l_max
        other.block_of_vertex = list(self.block_of_vertex)
        other.block_weights = list(self.block_weights)
        other.block_sizes = list(self.block_sizes)
        other._pin_counts = [list(counts) for counts in self._pin_counts]
        other._connectivity = list(self._connectivity)
        other._touched = [set(blocks) for blocks in self._touched]
        other.km1 = self.km1
        other.cut = self.cut
        return other

    def block(self, vertex):
        return self.block_of_vertex[vertex]

    def block_vertices(self, block):
        '''
        Vertices of a block in increasing id order
        '''
        return [vertex for vertex, b in enumerate(self.block_of_vertex) if b == block]

    def pin_count(self, net, block):
        return self._pin_counts[net][block]

    def connectivity(self, net):
        '''
        Return lambda(e)
        '''
        return self._connectivity[net]

    def connectivity_set(self, net):
        '''
        Return Lambda(e): blocks touched by net
        '''
        return frozenset(self._touched[net])

    def touched_blocks(self, net):
        '''
        Live set of blocks touched by net; callers must not modify it
        '''
        return self._touched[net]

    def is_cut(self, net):
        return self._connectivity[net] > 1

    def max_block_weight(self):
        return max(self.block_weights)

    def imbalance(self):
        '''
        max_i c(V_i) / ceil(c(V)/k) - 1
        '''
        if self.perfect_weight == 0:
            return 0.0
        return self.max_block_weight() / self.perfect_weight - 1

    def is_balanced(self):
        return self.max_block_weight() <= self.l_max

    def fits(self, block, weight):
        '''
        True if `weight` can be added to block without exceeding l_max
        '''
        return self.block_weights[block] + weight <= self.l_max

    def has_empty_block(self):
        return 0 in self.block_sizes

    def pair_cut_weight(self, block_i, block_j):
        '''
        Total weight of nets with pins in both blocks
        '''
        return sum(
            self.hypergraph.net_weights[net]
            for net, counts in enumerate(self._pin_counts)
            if counts[block_i] and counts[block_j]
        )

    def move_gain(self, vertex, to_block):
        '''
        Decrease of km1 when moving vertex to to_block
        '''
        from_block = self.block_of_vertex[vertex]
        if from_block == to_block:
            return 0
        gain = 0
        for net in self.hypergraph.nets_of_vertex[vertex]:
            counts = self._pin_counts[net]
            weight = self.hypergraph.net_weights[net]
            if counts[from_block] == 1:
                gain += weight
            if counts[to_block] == 0:
                gain -= weight
        return gain

    def move(self, vertex, to_block):
        '''
        Move vertex to block, updating weights, pin counts and objectives
        '''
        from_block = self.block_of_vertex[vertex]
        if from_block == to_block:
            return
        if to_block < 0 or to_block >= self.k:
            raise BlockOutOfRangeError('Block {} out of range [0,{})'.format(to_block, self.k))
        hypergraph = self.hypergraph
        vertex_weight = hypergraph.vertex_weights[vertex]
        self.block_of_vertex[vertex] = to_block
        self.block_weights[from_block] -= vertex_weight
        self.block_weights[to_block] += vertex_weight
        self.block_sizes[from_block] -= 1
        self.block_sizes[to_block] += 1
        for net in hypergraph.nets_of_vertex[vertex]:
            counts = self._pin_counts[net]
            weight = hypergraph.net_weights[net]
            lambda_before = self._connectivity[net]
            counts[from_block] -= 1
            if counts[from_block] == 0:
                self._connectivity[net] -= 1
                self._touched[net].discard(from_block)
                self.km1 -= weight
            counts[to_block] += 1
            if counts[to_block] == 1:
                self._connectivity[net] += 1
                self._touched[net].add(to_block)
                self.km1 += weight
            lambda_after = self._connectivity[net]
            if lambda_before > 1 and lambda_after == 1:
                self.cut -= weight
            elif lambda_before == 1 and lambda_after > 1:
                self.cut += weight

    def assign(self, assignment):
        '''
        Apply {vertex: block} and return {vertex: old block} for the vertices that moved
        '''
        previous = {}
        for vertex, block in assignment.items():
            old_block = self.block_of_vertex[vertex]
            if old_block != block:
                previous[vertex] = old_block
                self.move(vertex, block)
        return previous


def partition_from_blocks(hypergraph, k, epsilon, blocks):
    '''
    Build a partition from a list of vertex collections, one per block
    '''
    block_of_vertex = [None] * hypergraph.num_vertices
    for block, vertices in enumerate(blocks):
        for vertex in vertices:
            block_of_vertex[vertex] = block
    if None in block_of_vertex:
        raise InvalidPartitionError('Vertex {} is not assigned'.format(block_of_vertex.index(None)))
    return Partition(hypergraph, k, epsilon, block_of_vertex)


# pylint: disable=missing-docstring

class PartitionError(HyperflowError):
    pass


class InvalidPartitionError(PartitionError, InputError):
    pass


class BlockOutOfRangeError(InvalidPartitionError):
    pass


class EmptyBlockError(InvalidPartitionError):
    pass
