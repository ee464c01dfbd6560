'''
Hypergraph H=(V,E,c,w) with dense 0-based vertex and net ids
'''

import logging

from utils.errors import HyperflowError, InputError


logger = logging.getLogger(__name__)


class Hypergraph:
    '''
    Immutable hypergraph

    pins_of_net[e]: ordered pins of net e
    nets_of_vertex[v]: incident nets of vertex v (I(v), in increasing net id order)
    vertex_weights[v]: c(v) > 0
    net_weights[e]: w(e) > 0
    '''

    def __init__(self, num_vertices, pins_of_net, net_weights=None, vertex_weights=None):
        if num_vertices < 0:
            raise InvalidHypergraphError('Negative vertex count: {}'.format(num_vertices))
        self.num_vertices = num_vertices
        self.pins_of_net = tuple(tuple(pins) for pins in pins_of_net)
        self.num_nets = len(self.pins_of_net)
        if net_weights is None:
            net_weights = [1] * self.num_nets
        if vertex_weights is None:
            vertex_weights = [1] * self.num_vertices
        self.net_weights = tuple(net_weights)
        self.vertex_weights = tuple(vertex_weights)
        self._validate()
        nets_of_vertex = [[] for _ in range(self.num_vertices)]
        for net, pins in enumerate(self.pins_of_net):
            for pin in pins:
                nets_of_vertex[pin].append(net)
        self.nets_of_vertex = tuple(tuple(nets) for nets in nets_of_vertex)
        self.num_pins = sum(len(pins) for pins in self.pins_of_net)
        self.total_weight = sum(self.vertex_weights)

    def __repr__(self):
        return 'Hypergraph(n={}, m={}, p={})'.format(self.num_vertices, self.num_nets, self.num_pins)

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (
            self.num_vertices == other.num_vertices
            and self.pins_of_net == other.pins_of_net
            and self.net_weights == other.net_weights
            and self.vertex_weights == other.vertex_weights
        )

    def __hash__(self):
        return hash((self.num_vertices, self.pins_of_net))

    def pins(self, net):
        '''
        Return pins of net
        '''
        return self.pins_of_net[net]

    def nets(self, vertex):
        '''
        Return incident nets of vertex
        '''
        return self.nets_of_vertex[vertex]

    def net_size(self, net):
        return len(self.pins_of_net[net])

    def degree(self, vertex):
        return len(self.nets_of_vertex[vertex])

    def vertex_weight(self, vertex):
        return self.vertex_weights[vertex]

    def net_weight(self, net):
        return self.net_weights[net]

    def weight_of(self, vertices):
        '''
        Total weight of a vertex collection
        '''
        return sum(self.vertex_weights[vertex] for vertex in vertices)

    def is_graph(self):
        '''
        True if every net has exactly two pins
        '''
        return all(len(pins) == 2 for pins in self.pins_of_net)

    def neighbors(self, vertex):
        '''
        Vertices sharing at least one net with vertex (excluding itself)
        '''
        result = set()
        for net in self.nets_of_vertex[vertex]:
            result.update(self.pins_of_net[net])
        result.discard(vertex)
        return result

    def check_consistency(self):
        '''
        Check pin lists against incidence lists and the pin count identity
        '''
        for net, pins in enumerate(self.pins_of_net):
            for pin in pins:
                if net not in self.nets_of_vertex[pin]:
                    return False
        for vertex, nets in enumerate(self.nets_of_vertex):
            for net in nets:
                if vertex not in self.pins_of_net[net]:
                    return False
        return self.num_pins == sum(len(nets) for nets in self.nets_of_vertex)

    def _validate(self):
        if len(self.net_weights) != self.num_nets:
            raise InvalidHypergraphError('Expected {} net weights, got {}'.format(self.num_nets, len(self.net_weights)))
        if len(self.vertex_weights) != self.num_vertices:
            raise InvalidHypergraphError('Expected {} vertex weights, got {}'.format(self.num_vertices, len(self.vertex_weights)))
        for net, pins in enumerate(self.pins_of_net):
            if not pins:
                raise InvalidHypergraphError('Net {} has no pins'.format(net))
            if len(set(pins)) != len(pins):
                raise InvalidHypergraphError('Net {} has duplicate pins'.format(net))
            for pin in pins:
                if pin < 0 or pin >= self.num_vertices:
                    raise InvalidHypergraphError('Net {} has pin {} out of range'.format(net, pin))
        for net, weight in enumerate(self.net_weights):
            if weight <= 0:
                raise InvalidHypergraphError('Net {} has non-positive weight {}'.format(net, weight))
        for vertex, weight in enumerate(self.vertex_weights):
            if weight <= 0:
                raise InvalidHypergraphError('Vertex {} has non-positive weight {}'.format(vertex, weight))


# pylint: disable=missing-docstring

class HypergraphError(HyperflowError):
    pass


class InvalidHypergraphError(HypergraphError, InputError):
    pass
