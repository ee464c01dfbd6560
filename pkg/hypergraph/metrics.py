'''
Objective functions evaluated from scratch over the pin lists

The partition object maintains the same values incrementally; these functions are
the reference they are checked against.
'''

from utils.errors import HyperflowError, InputError
from utils.utils import ceil_div, to_fraction


def connectivity(hypergraph, partition, net):
    '''
    Return (lambda(e), Lambda(e))
    '''
    if net < 0 or net >= hypergraph.num_nets:
        raise InvalidNetError('Invalid net id: {}'.format(net))
    blocks = frozenset(partition.block_of_vertex[pin] for pin in hypergraph.pins_of_net[net])
    return len(blocks), blocks


def km1_metric(hypergraph, partition):
    '''
    Sum over cut nets of (lambda(e) - 1) * w(e)
    '''
    total = 0
    for net in range(hypergraph.num_nets):
        lambda_e, _ = connectivity(hypergraph, partition, net)
        total += (lambda_e - 1) * hypergraph.net_weights[net]
    return total


def cut_metric(hypergraph, partition):
    '''
    Sum over cut nets of w(e)
    '''
    total = 0
    for net in range(hypergraph.num_nets):
        lambda_e, _ = connectivity(hypergraph, partition, net)
        if lambda_e > 1:
            total += hypergraph.net_weights[net]
    return total


def block_weights(hypergraph, partition):
    weights = [0] * partition.k
    for vertex, block in enumerate(partition.block_of_vertex):
        weights[block] += hypergraph.vertex_weights[vertex]
    return weights


def imbalance(hypergraph, partition):
    '''
    max_i c(V_i) / ceil(c(V)/k) - 1
    '''
    perfect_weight = ceil_div(hypergraph.total_weight, partition.k)
    if perfect_weight == 0:
        return 0.0
    return max(block_weights(hypergraph, partition)) / perfect_weight - 1


def is_balanced(hypergraph, partition, epsilon):
    perfect_weight = ceil_div(hypergraph.total_weight, partition.k)
    return max(block_weights(hypergraph, partition)) <= (1 + to_fraction(epsilon)) * perfect_weight


# pylint: disable=missing-docstring

class MetricsError(HyperflowError):
    pass


class InvalidNetError(MetricsError, InputError):
    pass
