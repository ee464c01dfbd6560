'''
Subhypergraph H_B induced by a vertex set B, with net classification and border sets
'''

from enum import Enum
import logging

from utils.errors import HyperflowError, InputError
from .hypergraph import Hypergraph


logger = logging.getLogger(__name__)


class NetClass(Enum):
    '''
    Class of a parent net with respect to B
    '''
    EXTERNAL = 0  # no pin in B
    INTERNAL = 1  # all pins in B
    BORDER = 2  # pins inside and outside B


class SubHypergraph:
    '''
    H_B = (V_B, E_B) with id maps to the parent hypergraph

    Local vertex/net ids are dense; parent <-> local maps are plain lists with -1 for "absent".
    For border nets the external pins are grouped by their block in the parent partition.
    '''

    def __init__(self, parent, members, block_of_vertex=None, block_i=None, block_j=None):
        self.parent = parent
        self.block_i = block_i
        self.block_j = block_j
        self.vertex_of_local = sorted(set(members))
        self.local_of_vertex = [-1] * parent.num_vertices
        for local, vertex in enumerate(self.vertex_of_local):
            self.local_of_vertex[vertex] = local
        self.net_class = [NetClass.EXTERNAL] * parent.num_nets
        self.local_of_net = [-1] * parent.num_nets
        self.net_of_local = []
        self.external_pins = {}
        local_pins = []
        touched = sorted({net for vertex in self.vertex_of_local for net in parent.nets_of_vertex[vertex]})
        internal_border = set()
        for net in touched:
            inside = []
            outside = []
            for pin in parent.pins_of_net[net]:
                if self.local_of_vertex[pin] >= 0:
                    inside.append(self.local_of_vertex[pin])
                else:
                    outside.append(pin)
            self.local_of_net[net] = len(self.net_of_local)
            self.net_of_local.append(net)
            local_pins.append(inside)
            if outside:
                self.net_class[net] = NetClass.BORDER
                by_block = {}
                for pin in outside:
                    block = block_of_vertex[pin] if block_of_vertex is not None else None
                    by_block.setdefault(block, []).append(pin)
                self.external_pins[net] = {block: tuple(pins) for block, pins in by_block.items()}
                internal_border.update(self.vertex_of_local[local] for local in inside)
            else:
                self.net_class[net] = NetClass.INTERNAL
        self.internal_border = frozenset(internal_border)
        self.local_block = [
            block_of_vertex[vertex] if block_of_vertex is not None else None
            for vertex in self.vertex_of_local
        ]
        self.local = Hypergraph(
            len(self.vertex_of_local),
            local_pins,
            net_weights=[parent.net_weights[net] for net in self.net_of_local],
            vertex_weights=[parent.vertex_weights[vertex] for vertex in self.vertex_of_local],
        )
        logger.debug(
            'Subhypergraph: %d vertices, %d nets (%d border), %d internal border vertices.',
            self.local.num_vertices, self.local.num_nets, len(self.external_pins), len(self.internal_border),
        )

    @property
    def members(self):
        return frozenset(self.vertex_of_local)

    @property
    def border_nets(self):
        '''
        Parent ids of border nets, increasing
        '''
        return sorted(self.external_pins)

    def is_empty(self):
        return not self.vertex_of_local

    def is_border_local(self, local_net):
        return self.net_class[self.net_of_local[local_net]] == NetClass.BORDER

    def external_in(self, net, block):
        '''
        External pins of border net `net` lying in `block`
        '''
        return self.external_pins.get(net, {}).get(block, ())

    def external_sides(self, local_net):
        '''
        (has external pin in block_i, has external pin in block_j) for a local net
        '''
        net = self.net_of_local[local_net]
        by_block = self.external_pins.get(net)
        if not by_block:
            return False, False
        return bool(by_block.get(self.block_i)), bool(by_block.get(self.block_j))

    def is_internal_border(self, local_vertex):
        return self.vertex_of_local[local_vertex] in self.internal_border


def induced_subhypergraph(hypergraph, members, partition=None, block_i=None, block_j=None):
    '''
    Build H_B for B = members, classifying nets relative to B and the blocks (block_i, block_j)
    '''
    members = set(members)
    block_of_vertex = None
    if partition is not None:
        block_of_vertex = partition.block_of_vertex
        for vertex in members:
            if vertex < 0 or vertex >= hypergraph.num_vertices:
                raise InvalidSubsetError('Vertex {} out of range'.format(vertex))
            if block_i is not None and block_of_vertex[vertex] not in (block_i, block_j):
                raise InvalidSubsetError('Vertex {} lies outside blocks {} and {}'.format(vertex, block_i, block_j))
    else:
        for vertex in members:
            if vertex < 0 or vertex >= hypergraph.num_vertices:
                raise InvalidSubsetError('Vertex {} out of range'.format(vertex))
    return SubHypergraph(hypergraph, members, block_of_vertex, block_i, block_j)


# pylint: disable=missing-docstring

class SubHypergraphError(HyperflowError):
    pass


class InvalidSubsetError(SubHypergraphError, InputError):
    pass
