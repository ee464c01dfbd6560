'''
Flow problems on top of a flow network

- F_G (graph model): internal border vertices of V_i are tied to the source, those of V_j to
  the sink; they cannot change sides
- F_H (hypergraph model): the source and the sink are attached to the bridging nodes of
  border nets, so every vertex of the corridor may change sides
- terminal problems: plain min-(s,t)-cut problems between vertex sets of H_B
'''

from enum import Enum
import logging

from utils.errors import ConfigError, HyperflowError, InputError
from .network import build_network, NetworkVariant, NodeType, INFINITE


logger = logging.getLogger(__name__)


class FlowModel(Enum):
    '''
    Source/sink modeling of a corridor
    '''
    GRAPH = 'graph'
    HYPERGRAPH = 'hypergraph'

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        try:
            return cls(name)
        except ValueError:
            raise UnknownModelError('Unknown flow model: {}'.format(name))


class FlowProblem:
    '''
    Flow network with a source and a sink node

    attached_nets[e] = (source attached, sink attached) for local nets whose external
    pins are modeled by terminal attachments. forced_source / forced_sink hold local
    vertices elided from the network whose side is fixed.
    '''

    def __init__(self, network, model=None):
        self.network = network
        self.model = model
        self.subhypergraph = network.subhypergraph
        self.source = network.add_node(NodeType.SOURCE)
        self.sink = network.add_node(NodeType.SINK)
        self.source_arcs = []
        self.sink_arcs = []
        self.attached_nets = {}
        self.forced_source = set()
        self.forced_sink = set()

    def __repr__(self):
        return 'FlowProblem(model={}, network={}, sources={}, sinks={})'.format(
            self.model.value if self.model else None,
            self.network,
            len(self.source_arcs),
            len(self.sink_arcs),
        )

    def attach_source(self, node, capacity=INFINITE):
        arc = self.network.add_arc(self.source, node, capacity)
        self.source_arcs.append(arc)
        return arc

    def attach_sink(self, node, capacity=INFINITE):
        arc = self.network.add_arc(node, self.sink, capacity)
        self.sink_arcs.append(arc)
        return arc

    @property
    def source_set(self):
        '''
        Nodes tied to the source with infinite capacity
        '''
        network = self.network
        return frozenset(network.arc_head[arc] for arc in self.source_arcs if network.is_infinite(arc))

    @property
    def sink_set(self):
        network = self.network
        return frozenset(network.arc_tail[arc] for arc in self.sink_arcs if network.is_infinite(arc))

    def is_degenerate(self):
        '''
        True if no flow can ever be routed: one terminal has no attachment
        '''
        return not self.source_arcs or not self.sink_arcs

    def cut_weight(self, source_vertices):
        '''
        Weight of local nets separated when `source_vertices` (local ids) form the source side,
        counting terminal attachments as pins fixed on their side
        '''
        local = self.subhypergraph.local
        total = 0
        for net, pins in enumerate(local.pins_of_net):
            on_source = False
            on_sink = False
            for pin in pins:
                if pin in source_vertices:
                    on_source = True
                else:
                    on_sink = True
            attached = self.attached_nets.get(net)
            if attached:
                on_source = on_source or attached[0]
                on_sink = on_sink or attached[1]
            if on_source and on_sink:
                total += local.net_weights[net]
        return total

    def current_source_vertices(self):
        '''
        Local vertices currently in block_i of the parent partition
        '''
        sub = self.subhypergraph
        return frozenset(
            local for local, block in enumerate(sub.local_block)
            if block == sub.block_i
        )


def build_flow_problem(subhypergraph, config):
    '''
    Assemble F_G or F_H on the corridor subhypergraph according to the refiner config
    '''
    model = FlowModel.parse(config.model)
    variant = NetworkVariant.parse(config.network_variant)
    if model == FlowModel.GRAPH:
        problem = _build_graph_model(subhypergraph, variant)
    else:
        problem = _build_hypergraph_model(subhypergraph, variant, config.single_pin_modeling)
    logger.debug(
        '%s problem: %d nodes, %d arcs, %d source and %d sink attachments.',
        model.value, problem.network.num_nodes, problem.network.num_arcs,
        len(problem.source_arcs), len(problem.sink_arcs),
    )
    return problem


def _build_graph_model(sub, variant):
    border = [sub.local_of_vertex[vertex] for vertex in sorted(sub.internal_border)]
    network = build_network(sub, variant, excluded_vertices=border, skip_single_pin=True)
    problem = FlowProblem(network, FlowModel.GRAPH)
    for local in border:
        node = network.vertex_node[local]
        if sub.local_block[local] == sub.block_i:
            problem.attach_source(node)
        else:
            problem.attach_sink(node)
    return problem


def _build_hypergraph_model(sub, variant, single_pin_modeling):
    local = sub.local
    bridged = []
    compact = []
    excluded = []
    sides = {}
    for net in range(local.num_nets):
        if not sub.is_border_local(net):
            continue
        has_i, has_j = sub.external_sides(net)
        if not has_i and not has_j:
            continue
        sides[net] = (has_i, has_j)
        if local.net_size(net) == 1 and single_pin_modeling:
            compact.append(net)
            excluded.append(local.pins_of_net[net][0])
        else:
            bridged.append(net)
    network = build_network(sub, variant, bridged_nets=bridged, excluded_vertices=excluded, skip_single_pin=True)
    problem = FlowProblem(network, FlowModel.HYPERGRAPH)
    for net in bridged:
        has_i, has_j = sides[net]
        if has_i:
            problem.attach_source(network.net_in[net])
        if has_j:
            problem.attach_sink(network.net_out[net])
        problem.attached_nets[net] = sides[net]
    for net in compact:
        has_i, has_j = sides[net]
        vertex_node = network.vertex_node[local.pins_of_net[net][0]]
        weight = local.net_weights[net]
        if has_i:
            bridge_in = network.add_node(NodeType.BRIDGE_IN, net)
            problem.attach_source(bridge_in)
            network.add_arc(bridge_in, vertex_node, weight)
        if has_j:
            bridge_out = network.add_node(NodeType.BRIDGE_OUT, net)
            network.add_arc(vertex_node, bridge_out, weight)
            problem.attach_sink(bridge_out)
        problem.attached_nets[net] = sides[net]
    return problem


def build_terminal_problem(subhypergraph, variant, source_vertices, sink_vertices):
    '''
    Min-(s,t)-cut problem between two disjoint sets of local vertices

    Terminals elided by the reduced network are attached through their star nodes
    (source to e' and e'' to sink of every incident net) and keep their side.
    '''
    source_vertices = set(source_vertices)
    sink_vertices = set(sink_vertices)
    if source_vertices & sink_vertices:
        raise TerminalOverlapError('Vertices {} are both source and sink'.format(sorted(source_vertices & sink_vertices)))
    network = build_network(subhypergraph, variant)
    problem = FlowProblem(network)
    local = subhypergraph.local
    for vertex in sorted(source_vertices):
        node = network.vertex_node[vertex]
        if node >= 0:
            problem.attach_source(node)
            continue
        problem.forced_source.add(vertex)
        for net in local.nets_of_vertex[vertex]:
            if network.net_in[net] >= 0:
                problem.attach_source(network.net_in[net])
    for vertex in sorted(sink_vertices):
        node = network.vertex_node[vertex]
        if node >= 0:
            problem.attach_sink(node)
            continue
        problem.forced_sink.add(vertex)
        for net in local.nets_of_vertex[vertex]:
            if network.net_out[net] >= 0:
                problem.attach_sink(network.net_out[net])
    return problem


# pylint: disable=missing-docstring

class FlowProblemError(HyperflowError):
    pass


class UnknownModelError(FlowProblemError, ConfigError):
    pass


class TerminalOverlapError(FlowProblemError, InputError):
    pass
