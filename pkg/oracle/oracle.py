'''
Brute-force references for small instances

Every function refuses instances above its size bound instead of running unbounded.
'''

import itertools
import logging

from flows.network import INFINITE, NetworkStats, NetworkVariant
from utils import config
from utils.errors import HyperflowError, InputError
from utils.utils import ceil_div, to_fraction


logger = logging.getLogger(__name__)


def _net_masks(hypergraph):
    masks = []
    for pins in hypergraph.pins_of_net:
        mask = 0
        for pin in pins:
            mask |= 1 << pin
        masks.append(mask)
    return masks


def brute_min_st_cut(hypergraph, source, sink, max_vertices=config.oracle_max_vertices):
    '''
    Minimum weight of nets separated by a bipartition with source and sink on opposite sides

    Returns (weight, source side).
    '''
    n = hypergraph.num_vertices
    if n > max_vertices:
        raise OracleTooLargeError('{} vertices exceed the oracle bound {}'.format(n, max_vertices))
    if source == sink:
        raise OracleInputError('Source and sink are the same vertex {}'.format(source))
    for vertex in (source, sink):
        if vertex < 0 or vertex >= n:
            raise OracleInputError('Vertex {} out of range'.format(vertex))
    free = [vertex for vertex in range(n) if vertex not in (source, sink)]
    masks = list(zip(_net_masks(hypergraph), hypergraph.net_weights))
    full = (1 << n) - 1
    best_weight = None
    best_side = None
    for choice in range(1 << len(free)):
        side = 1 << source
        for bit, vertex in enumerate(free):
            if choice >> bit & 1:
                side |= 1 << vertex
        other = full & ~side
        weight = sum(net_weight for mask, net_weight in masks if mask & side and mask & other)
        if best_weight is None or weight < best_weight:
            best_weight, best_side = weight, side
    return best_weight, frozenset(vertex for vertex in range(n) if best_side >> vertex & 1)


def brute_best_partition(hypergraph, k, epsilon, max_assignments=config.oracle_max_assignments):
    '''
    Minimum km1 over all eps-balanced k-way partitions with non-empty blocks

    Returns (km1, block_of_vertex), (None, None) if no such partition exists.
    '''
    n = hypergraph.num_vertices
    if k < 1:
        raise OracleInputError('Invalid number of blocks: {}'.format(k))
    if k ** n > max_assignments:
        raise OracleTooLargeError('{}^{} assignments exceed the oracle bound {}'.format(k, n, max_assignments))
    l_max = (1 + to_fraction(epsilon)) * ceil_div(hypergraph.total_weight, k)
    vertex_weights = hypergraph.vertex_weights
    best_km1 = None
    best_blocks = None
    for blocks in itertools.product(range(k), repeat=n):
        weights = [0] * k
        sizes = [0] * k
        for vertex, block in enumerate(blocks):
            weights[block] += vertex_weights[vertex]
            sizes[block] += 1
        if max(weights) > l_max or (n >= k and 0 in sizes):
            continue
        km1 = 0
        for net, pins in enumerate(hypergraph.pins_of_net):
            km1 += (len({blocks[pin] for pin in pins}) - 1) * hypergraph.net_weights[net]
        if best_km1 is None or km1 < best_km1:
            best_km1, best_blocks = km1, list(blocks)
    return best_km1, best_blocks


def enumerate_network_min_cuts(network, sources, sinks, max_nodes=config.oracle_max_network_nodes):
    '''
    All node sets containing `sources` and missing `sinks` whose outgoing capacity is minimum

    Returns a list of (node set, capacity), ordered by the enumeration.
    '''
    sources = frozenset(sources)
    sinks = frozenset(sinks)
    if sources & sinks:
        raise OracleInputError('Nodes {} are sources and sinks'.format(sorted(sources & sinks)))
    inner = [node for node in range(network.num_nodes) if node not in sources and node not in sinks]
    if len(inner) > max_nodes:
        raise OracleTooLargeError('{} non-terminal nodes exceed the oracle bound {}'.format(len(inner), max_nodes))
    arcs = list(network.arcs())
    cuts = []
    best = None
    for choice in range(1 << len(inner)):
        side = set(sources)
        side.update(node for bit, node in enumerate(inner) if choice >> bit & 1)
        capacity = 0
        for tail, head, arc_capacity in arcs:
            if tail in side and head not in side:
                capacity += arc_capacity
        if best is None or capacity < best:
            best = capacity
            cuts = []
        if capacity == best:
            cuts.append((frozenset(side), capacity))
    if best == INFINITE:
        return []
    return cuts


def counting_oracle(subhypergraph, variant, bridged_nets=(), excluded_vertices=(), skip_single_pin=False):
    '''
    Node, arc and infinite-arc counts of a flow network from closed-form size formulas
    '''
    variant = NetworkVariant.parse(variant)
    local = subhypergraph.local
    bridged_nets = set(bridged_nets)
    excluded_vertices = set(excluded_vertices)
    sizes = [len(pins) for pins in local.pins_of_net]

    def kind(net):
        if sizes[net] == 1 and net not in bridged_nets and (skip_single_pin or variant != NetworkVariant.LAWLER):
            return 'none'
        if sizes[net] == 2 and net not in bridged_nets and variant != NetworkVariant.LAWLER:
            return 'direct'
        return 'bridged'

    kinds = [kind(net) for net in range(local.num_nets)]
    nodes = local.num_vertices + 2 * kinds.count('bridged')
    arcs = 2 * kinds.count('direct') + sum(1 + 2 * sizes[net] for net in range(local.num_nets) if kinds[net] == 'bridged')
    infinite = sum(2 * sizes[net] for net in range(local.num_nets) if kinds[net] == 'bridged')
    if variant == NetworkVariant.REDUCED:
        for vertex in range(local.num_vertices):
            nets = local.nets_of_vertex[vertex]
            if vertex in excluded_vertices or len(nets) > 3:
                continue
            if any(kinds[net] == 'direct' for net in nets):
                continue
            degree = sum(1 for net in nets if kinds[net] == 'bridged')
            nodes -= 1
            arcs += degree * (degree - 1) - 2 * degree
            infinite += degree * (degree - 1) - 2 * degree
    return NetworkStats(nodes, arcs, infinite)


# pylint: disable=missing-docstring

class OracleError(HyperflowError):
    pass


class OracleTooLargeError(OracleError, InputError):
    pass


class OracleInputError(OracleError, InputError):
    pass
