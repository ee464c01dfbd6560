'''
Quotient graph of a k-way partition with active block flags and pair improvement history
'''

import logging


logger = logging.getLogger(__name__)


class PairHistory:
    '''
    Number of improving refinements per unordered block pair; lives across levels of one run
    '''

    def __init__(self):
        self._improvements = {}

    def record(self, block_i, block_j):
        pair = _pair(block_i, block_j)
        self._improvements[pair] = self._improvements.get(pair, 0) + 1

    def improved(self, block_i, block_j):
        return self._improvements.get(_pair(block_i, block_j), 0) > 0

    def count(self, block_i, block_j):
        return self._improvements.get(_pair(block_i, block_j), 0)

    def reset(self):
        self._improvements.clear()


class QuotientGraph:
    '''
    Q: one node per block, an edge between blocks sharing a cut net

    All blocks start active.
    '''

    def __init__(self, k, edges, history=None):
        self.k = k
        self.edges = frozenset(_pair(i, j) for i, j in edges)
        self.active = [True] * k
        self.history = history if history is not None else PairHistory()

    def __repr__(self):
        return 'QuotientGraph(k={}, edges={})'.format(self.k, sorted(self.edges))

    def adjacent(self, block_i, block_j):
        return _pair(block_i, block_j) in self.edges

    def pairs(self):
        '''
        Edges in increasing order
        '''
        return sorted(self.edges)

    def active_pairs(self):
        '''
        Edges with at least one active endpoint
        '''
        return [(i, j) for i, j in self.pairs() if self.active[i] or self.active[j]]

    def has_active_blocks(self):
        return any(self.active)

    def next_round(self, reactivated):
        '''
        Only the blocks in `reactivated` stay active for the next round
        '''
        self.active = [block in reactivated for block in range(self.k)]


def quotient_graph(hypergraph, partition, history=None):
    '''
    Build Q from the connectivity sets of the cut nets
    '''
    edges = set()
    for net in range(hypergraph.num_nets):
        if partition.connectivity(net) < 2:
            continue
        blocks = sorted(partition.connectivity_set(net))
        for idx, block_i in enumerate(blocks):
            for block_j in blocks[idx + 1:]:
                edges.add((block_i, block_j))
    logger.debug('Quotient graph: %d blocks, %d edges.', partition.k, len(edges))
    return QuotientGraph(partition.k, edges, history)


def _pair(block_i, block_j):
    return (block_i, block_j) if block_i < block_j else (block_j, block_i)
