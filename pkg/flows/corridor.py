'''
Corridor around the cut between two blocks

B1 grows from the boundary vertices of V_i by breadth-first search inside V_i while
c(B1) <= (1 + eps') * ceil((c(V_i) + c(V_j)) / 2) - c(V_j); B2 symmetrically.
'''

from collections import namedtuple
import logging

from utils.errors import ConfigError, HyperflowError
from utils.utils import ceil_div, to_fraction


logger = logging.getLogger(__name__)


Corridor = namedtuple('Corridor', [
    'members',  # frozenset B = B1 | B2
    'side_i',  # B1, subset of V_i
    'side_j',  # B2, subset of V_j
    'weight_i',
    'weight_j',
    'eps_prime',
])


def corridor_bounds(partition, block_i, block_j, eps_prime):
    '''
    Weight bounds for B1 and B2
    '''
    eps_prime = to_fraction(eps_prime)
    if eps_prime < 0:
        raise InvalidEpsilonError('Negative eps\': {}'.format(eps_prime))
    weight_i = partition.block_weights[block_i]
    weight_j = partition.block_weights[block_j]
    half = (1 + eps_prime) * ceil_div(weight_i + weight_j, 2)
    return half - weight_j, half - weight_i


def boundary_vertices(hypergraph, partition, block, other):
    '''
    Vertices of `block` on a net with pins in both `block` and `other`, increasing
    '''
    boundary = set()
    for net in range(hypergraph.num_nets):
        if partition.pin_count(net, block) and partition.pin_count(net, other):
            boundary.update(pin for pin in hypergraph.pins_of_net[net] if partition.block(pin) == block)
    return sorted(boundary)


def _grow(hypergraph, partition, block, seeds, budget, rng, max_vertices=None):
    grown = []
    weight = 0
    visited = set(seeds)
    layer = list(seeds)
    while layer:
        rng.shuffle(layer)
        next_layer = []
        for vertex in layer:
            if max_vertices is not None and len(grown) >= max_vertices:
                return grown, weight
            vertex_weight = hypergraph.vertex_weights[vertex]
            if weight + vertex_weight > budget:
                continue
            grown.append(vertex)
            weight += vertex_weight
            for net in hypergraph.nets_of_vertex[vertex]:
                for pin in hypergraph.pins_of_net[net]:
                    if pin not in visited and partition.block(pin) == block:
                        visited.add(pin)
                        next_layer.append(pin)
        layer = next_layer
    return grown, weight


def compute_corridor(hypergraph, partition, block_i, block_j, eps_prime, rng, max_vertices=None):
    '''
    Corridor B = B1 | B2 around the cut of (V_i, V_j)

    With max_vertices set, the weight bounds are ignored and each side takes up to half of
    max_vertices vertices (network statistics).
    '''
    bound_i, bound_j = corridor_bounds(partition, block_i, block_j, eps_prime)
    seeds_i = boundary_vertices(hypergraph, partition, block_i, block_j)
    seeds_j = boundary_vertices(hypergraph, partition, block_j, block_i)
    limit_i = limit_j = None
    if max_vertices is not None:
        bound_i = bound_j = hypergraph.total_weight
        limit_i = ceil_div(max_vertices, 2)
        limit_j = max_vertices - limit_i
    side_i, weight_i = _grow(hypergraph, partition, block_i, seeds_i, bound_i, rng, limit_i)
    side_j, weight_j = _grow(hypergraph, partition, block_j, seeds_j, bound_j, rng, limit_j)
    logger.debug(
        'Corridor (%d,%d) eps\'=%s: |B1|=%d (%d <= %s), |B2|=%d (%d <= %s).',
        block_i, block_j, eps_prime, len(side_i), weight_i, bound_i, len(side_j), weight_j, bound_j,
    )
    return Corridor(
        frozenset(side_i) | frozenset(side_j),
        frozenset(side_i),
        frozenset(side_j),
        weight_i,
        weight_j,
        to_fraction(eps_prime),
    )


# pylint: disable=missing-docstring

class CorridorError(HyperflowError):
    pass


class InvalidEpsilonError(CorridorError, ConfigError):
    pass
