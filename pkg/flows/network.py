'''
Hypergraph flow networks built from a subhypergraph H_B

- lawler: every net gets bridging nodes e' and e'' with arc (e', e'') of capacity w(e)
  and infinite pin arcs (p, e') and (e'', p)
- liu_wong: two-pin nets become a pair of arcs (u, v), (v, u) of capacity w(e);
  bridging nodes only for nets with at least three pins; single-pin nets are dropped
- reduced: liu_wong without hypernodes of degree <= 3 that touch no two-pin net; each
  removed hypernode is replaced by infinite arcs (a'', b') between its incident nets
'''

from collections import namedtuple
from enum import Enum
import logging
import math

from utils.errors import ConfigError, HyperflowError


logger = logging.getLogger(__name__)


INFINITE = math.inf


class NodeType(Enum):
    '''
    Type of a flow network node
    '''
    VERTEX = 0
    BRIDGE_IN = 1  # e'
    BRIDGE_OUT = 2  # e''
    SOURCE = 3
    SINK = 4


class NetworkVariant(Enum):
    '''
    Flow network construction
    '''
    LAWLER = 'lawler'
    LIU_WONG = 'liu_wong'
    REDUCED = 'reduced'

    @classmethod
    def parse(cls, name):
        '''
        Accept "liu-wong" as well as "liu_wong"
        '''
        if isinstance(name, cls):
            return name
        try:
            return cls(name.replace('-', '_'))
        except ValueError:
            raise UnknownVariantError('Unknown network variant: {}'.format(name))


NetworkStats = namedtuple('NetworkStats', [
    'num_nodes',
    'num_arcs',
    'num_infinite_arcs',
])


class FlowNetwork:
    '''
    Directed capacitated graph with typed nodes mapped to the local ids of H_B

    vertex_node[v]: node of local vertex v, -1 if removed
    net_in[e], net_out[e]: e' and e'' of local net e, -1 if absent
    '''

    def __init__(self, subhypergraph=None):
        self.subhypergraph = subhypergraph
        local = subhypergraph.local if subhypergraph is not None else None
        self.node_type = []
        self.node_ref = []
        self.arc_tail = []
        self.arc_head = []
        self.arc_capacity = []
        self.vertex_node = [-1] * (local.num_vertices if local else 0)
        self.net_in = [-1] * (local.num_nets if local else 0)
        self.net_out = [-1] * (local.num_nets if local else 0)
        self.removed_vertices = frozenset()
        self.num_clique_arcs = 0

    def __repr__(self):
        return 'FlowNetwork(nodes={}, arcs={})'.format(self.num_nodes, self.num_arcs)

    @property
    def num_nodes(self):
        return len(self.node_type)

    @property
    def num_arcs(self):
        return len(self.arc_tail)

    def add_node(self, node_type, ref=None):
        '''
        Add node and return its id
        '''
        node = len(self.node_type)
        self.node_type.append(node_type)
        self.node_ref.append(ref)
        if node_type == NodeType.VERTEX and ref is not None and ref < len(self.vertex_node):
            self.vertex_node[ref] = node
        elif node_type == NodeType.BRIDGE_IN and ref is not None:
            self.net_in[ref] = node
        elif node_type == NodeType.BRIDGE_OUT and ref is not None:
            self.net_out[ref] = node
        return node

    def add_arc(self, tail, head, capacity):
        '''
        Add arc and return its id
        '''
        if tail < 0 or tail >= self.num_nodes or head < 0 or head >= self.num_nodes:
            raise InvalidArcError('Arc ({}, {}) has an invalid endpoint'.format(tail, head))
        if not capacity > 0:
            raise InvalidArcError('Arc ({}, {}) has non-positive capacity {}'.format(tail, head, capacity))
        arc = len(self.arc_tail)
        self.arc_tail.append(tail)
        self.arc_head.append(head)
        self.arc_capacity.append(capacity)
        return arc

    def is_infinite(self, arc):
        return self.arc_capacity[arc] == INFINITE

    def arcs(self):
        '''
        Iterate (tail, head, capacity)
        '''
        return zip(self.arc_tail, self.arc_head, self.arc_capacity)

    def node_label(self, node):
        '''
        Human readable node name, e.g. v3, e2', e2'', s, t
        '''
        node_type = self.node_type[node]
        ref = self.node_ref[node]
        if node_type == NodeType.VERTEX:
            return 'v{}'.format(ref)
        if node_type == NodeType.BRIDGE_IN:
            return "e{}'".format(ref)
        if node_type == NodeType.BRIDGE_OUT:
            return "e{}''".format(ref)
        if node_type == NodeType.SOURCE:
            return 's'
        return 't'

    def stats(self):
        return network_stats(self)


def network_stats(network):
    '''
    Node, arc and infinite-arc counts
    '''
    return NetworkStats(
        network.num_nodes,
        network.num_arcs,
        sum(1 for capacity in network.arc_capacity if capacity == INFINITE),
    )


def removable_vertices(local, variant, bridged_nets=(), excluded_vertices=()):
    '''
    Hypernodes of H_B that the reduced network elides: degree <= 3 in H_B and no incident
    two-pin net represented by direct arcs
    '''
    if variant != NetworkVariant.REDUCED:
        return frozenset()
    bridged_nets = set(bridged_nets)
    excluded_vertices = set(excluded_vertices)
    removed = set()
    for vertex in range(local.num_vertices):
        if vertex in excluded_vertices:
            continue
        nets = local.nets_of_vertex[vertex]
        if len(nets) > 3:
            continue
        if any(local.net_size(net) == 2 and net not in bridged_nets for net in nets):
            continue
        removed.add(vertex)
    return frozenset(removed)


def build_network(subhypergraph, variant, bridged_nets=(), excluded_vertices=(), skip_single_pin=False):
    '''
    Build the flow network of H_B

    bridged_nets: local nets that get bridging nodes regardless of their size
    excluded_vertices: local vertices never elided by the reduced variant
    skip_single_pin: drop single-pin nets in every variant (unless bridged)
    '''
    variant = NetworkVariant.parse(variant)
    local = subhypergraph.local
    bridged_nets = frozenset(bridged_nets)
    network = FlowNetwork(subhypergraph)
    removed = removable_vertices(local, variant, bridged_nets, excluded_vertices)
    network.removed_vertices = removed
    for vertex in range(local.num_vertices):
        if vertex not in removed:
            network.add_node(NodeType.VERTEX, vertex)
    for net in range(local.num_nets):
        pins = local.pins_of_net[net]
        weight = local.net_weights[net]
        if len(pins) == 1 and net not in bridged_nets and (skip_single_pin or variant != NetworkVariant.LAWLER):
            continue
        if len(pins) == 2 and net not in bridged_nets and variant != NetworkVariant.LAWLER:
            u, v = network.vertex_node[pins[0]], network.vertex_node[pins[1]]
            network.add_arc(u, v, weight)
            network.add_arc(v, u, weight)
            continue
        bridge_in = network.add_node(NodeType.BRIDGE_IN, net)
        bridge_out = network.add_node(NodeType.BRIDGE_OUT, net)
        network.add_arc(bridge_in, bridge_out, weight)
        for pin in pins:
            node = network.vertex_node[pin]
            if node < 0:
                continue
            network.add_arc(node, bridge_in, INFINITE)
            network.add_arc(bridge_out, node, INFINITE)
    for vertex in sorted(removed):
        star = [net for net in local.nets_of_vertex[vertex] if network.net_in[net] >= 0]
        for net_a in star:
            for net_b in star:
                if net_a != net_b:
                    network.add_arc(network.net_out[net_a], network.net_in[net_b], INFINITE)
                    network.num_clique_arcs += 1
    logger.debug(
        '%s network: %d nodes, %d arcs, %d hypernodes removed.',
        variant.value, network.num_nodes, network.num_arcs, len(removed),
    )
    return network


def build_lawler(subhypergraph, **kwargs):
    return build_network(subhypergraph, NetworkVariant.LAWLER, **kwargs)


def build_liu_wong(subhypergraph, **kwargs):
    return build_network(subhypergraph, NetworkVariant.LIU_WONG, **kwargs)


def build_reduced(subhypergraph, **kwargs):
    return build_network(subhypergraph, NetworkVariant.REDUCED, **kwargs)


# pylint: disable=missing-docstring

class NetworkError(HyperflowError):
    pass


class InvalidArcError(NetworkError):
    pass


class UnknownVariantError(NetworkError, ConfigError):
    pass
