'''
Coarsening by heavy-edge matching

Pairs (u, v) are rated by the sum of w(e) / (|e| - 1) over the nets they share. A coarse
vertex may not exceed ceil(c(V) / target) * factor. Single-pin nets are dropped and
parallel nets merged on every level.
'''

import logging

from hypergraph.hypergraph import Hypergraph
from utils import config
from utils.errors import HyperflowError
from utils.utils import ceil_div


logger = logging.getLogger(__name__)


class Hierarchy:
    '''
    hypergraphs[0] is the input; coarse_of_fine[l] maps vertices of level l to level l + 1
    '''

    def __init__(self, hypergraph):
        self.hypergraphs = [hypergraph]
        self.coarse_of_fine = []

    def __repr__(self):
        return 'Hierarchy({})'.format(' > '.join(str(h.num_vertices) for h in self.hypergraphs))

    @property
    def num_levels(self):
        return len(self.hypergraphs)

    @property
    def coarsest(self):
        return len(self.hypergraphs) - 1

    def add_level(self, hypergraph, coarse_of_fine):
        self.hypergraphs.append(hypergraph)
        self.coarse_of_fine.append(list(coarse_of_fine))

    def project(self, level, block_of_coarse):
        '''
        Blocks of level - 1 from blocks of level
        '''
        if level < 1 or level > self.coarsest:
            raise LevelOutOfRangeError('Cannot project from level {}'.format(level))
        return project(block_of_coarse, self.coarse_of_fine[level - 1])


def project(block_of_coarse, coarse_of_fine):
    return [block_of_coarse[coarse] for coarse in coarse_of_fine]


def contract(hypergraph, coarse_of_fine, num_coarse=None):
    '''
    Contract vertices sharing a coarse id; single-pin nets vanish, parallel nets merge
    '''
    if num_coarse is None:
        num_coarse = max(coarse_of_fine) + 1 if coarse_of_fine else 0
    vertex_weights = [0] * num_coarse
    for vertex, coarse in enumerate(coarse_of_fine):
        vertex_weights[coarse] += hypergraph.vertex_weights[vertex]
    net_of_pins = {}
    pins_of_net = []
    net_weights = []
    for net, pins in enumerate(hypergraph.pins_of_net):
        coarse_pins = []
        seen = set()
        for pin in pins:
            coarse = coarse_of_fine[pin]
            if coarse not in seen:
                seen.add(coarse)
                coarse_pins.append(coarse)
        if len(coarse_pins) < 2:
            continue
        key = tuple(sorted(coarse_pins))
        if key in net_of_pins:
            net_weights[net_of_pins[key]] += hypergraph.net_weights[net]
            continue
        net_of_pins[key] = len(pins_of_net)
        pins_of_net.append(coarse_pins)
        net_weights.append(hypergraph.net_weights[net])
    return Hypergraph(num_coarse, pins_of_net, net_weights, vertex_weights)


def heavy_edge_matching(hypergraph, max_weight, rng, large_net=config.coarsening_large_net):
    '''
    Return coarse_of_fine, num_coarse for one matching round
    '''
    mate = [-1] * hypergraph.num_vertices
    order = list(range(hypergraph.num_vertices))
    rng.shuffle(order)
    for vertex in order:
        if mate[vertex] >= 0:
            continue
        ratings = {}
        for net in hypergraph.nets_of_vertex[vertex]:
            pins = hypergraph.pins_of_net[net]
            if len(pins) < 2 or len(pins) > large_net:
                continue
            score = hypergraph.net_weights[net] / (len(pins) - 1)
            for pin in pins:
                if pin != vertex and mate[pin] < 0:
                    ratings[pin] = ratings.get(pin, 0) + score
        best = None
        best_rating = 0
        for pin, rating in ratings.items():
            if hypergraph.vertex_weights[vertex] + hypergraph.vertex_weights[pin] > max_weight:
                continue
            if rating > best_rating or (rating == best_rating and best is not None and pin < best):
                best, best_rating = pin, rating
        if best is not None:
            mate[vertex] = best
            mate[best] = vertex
    return _number(mate)


def random_matching(hypergraph, mate, max_weight, rng):
    '''
    Pair up vertices left unmatched, regardless of adjacency
    '''
    mate = list(mate)
    single = [vertex for vertex in range(hypergraph.num_vertices) if mate[vertex] < 0]
    rng.shuffle(single)
    single.sort(key=lambda vertex: hypergraph.vertex_weights[vertex])
    low, high = 0, len(single) - 1
    while low < high:
        u, v = single[low], single[high]
        if hypergraph.vertex_weights[u] + hypergraph.vertex_weights[v] <= max_weight:
            mate[u] = v
            mate[v] = u
            low += 1
        high -= 1
    return mate


def _number(mate):
    coarse_of_fine = [-1] * len(mate)
    num_coarse = 0
    for vertex, other in enumerate(mate):
        if coarse_of_fine[vertex] >= 0:
            continue
        coarse_of_fine[vertex] = num_coarse
        if other >= 0:
            coarse_of_fine[other] = num_coarse
        num_coarse += 1
    return coarse_of_fine, num_coarse


def _mates(coarse_of_fine, num_coarse):
    members = [[] for _ in range(num_coarse)]
    for vertex, coarse in enumerate(coarse_of_fine):
        members[coarse].append(vertex)
    mate = [-1] * len(coarse_of_fine)
    for group in members:
        if len(group) == 2:
            mate[group[0]] = group[1]
            mate[group[1]] = group[0]
    return mate


def coarsen(
        hypergraph,
        target_vertices,
        rng,
        weight_factor=config.coarse_vertex_weight_factor,
        stall_ratio=config.coarsening_stall_ratio,
        large_net=config.coarsening_large_net,
):
    '''
    Contract until at most target_vertices remain or no pair can be contracted
    '''
    hierarchy = Hierarchy(hypergraph)
    max_weight = ceil_div(hypergraph.total_weight, max(target_vertices, 1)) * weight_factor
    current = hypergraph
    while current.num_vertices > target_vertices:
        coarse_of_fine, num_coarse = heavy_edge_matching(current, max_weight, rng, large_net)
        if num_coarse > stall_ratio * current.num_vertices:
            mate = random_matching(current, _mates(coarse_of_fine, num_coarse), max_weight, rng)
            coarse_of_fine, num_coarse = _number(mate)
        if num_coarse == current.num_vertices:
            logger.info('Coarsening stalled at %d vertices.', current.num_vertices)
            break
        current = contract(current, coarse_of_fine, num_coarse)
        hierarchy.add_level(current, coarse_of_fine)
        logger.debug('Level %d: %d vertices, %d nets.', hierarchy.coarsest, current.num_vertices, current.num_nets)
    logger.info('Coarsening: %s.', hierarchy)
    return hierarchy


# pylint: disable=missing-docstring

class CoarseningError(HyperflowError):
    pass


class LevelOutOfRangeError(CoarseningError):
    pass
