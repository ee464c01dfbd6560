'''
Initial partitioning of the coarsest hypergraph

Attempts alternate between random balanced assignment and breadth-first region growing;
each is polished by FM. The best attempt wins by (feasible, heaviest block when infeasible, km1).
'''

from collections import deque
import logging
import random

from hypergraph.partition import Partition
from utils import config
from utils.errors import HyperflowError, InputError
from utils.utils import derive_seed
from .fm import fm_pass


logger = logging.getLogger(__name__)


def random_balanced(hypergraph, k, rng):
    '''
    Heaviest vertices first, each into the currently lightest block
    '''
    order = list(range(hypergraph.num_vertices))
    rng.shuffle(order)
    order.sort(key=lambda vertex: -hypergraph.vertex_weights[vertex])
    weights = [0] * k
    tiebreak = [rng.random() for _ in range(k)]
    block_of_vertex = [0] * hypergraph.num_vertices
    for vertex in order:
        block = min(range(k), key=lambda b: (weights[b], tiebreak[b]))
        block_of_vertex[vertex] = block
        weights[block] += hypergraph.vertex_weights[vertex]
    return block_of_vertex


def bfs_growing(hypergraph, k, rng):
    '''
    Grow k regions from random seeds; the lightest region takes the next vertex of its queue
    '''
    n = hypergraph.num_vertices
    block_of_vertex = [-1] * n
    seeds = rng.sample(range(n), k)
    queues = []
    weights = [0] * k
    unassigned = set(range(n))
    for block, seed in enumerate(seeds):
        block_of_vertex[seed] = block
        weights[block] += hypergraph.vertex_weights[seed]
        unassigned.discard(seed)
        queues.append(deque(sorted(hypergraph.neighbors(seed))))
    while unassigned:
        block = min(range(k), key=lambda b: (weights[b], b))
        queue = queues[block]
        vertex = -1
        while queue:
            candidate = queue.popleft()
            if block_of_vertex[candidate] < 0:
                vertex = candidate
                break
        if vertex < 0:
            vertex = rng.choice(sorted(unassigned))
        block_of_vertex[vertex] = block
        weights[block] += hypergraph.vertex_weights[vertex]
        unassigned.discard(vertex)
        queue.extend(sorted(pin for pin in hypergraph.neighbors(vertex) if block_of_vertex[pin] < 0))
    return block_of_vertex


def score(partition):
    '''
    Sort key of an attempt, smaller is better
    '''
    balanced = partition.is_balanced()
    return (not balanced, 0 if balanced else partition.max_block_weight(), partition.km1)


def initial_partition(hypergraph, k, epsilon, rng, attempts=config.initial_attempts, use_fm=True):
    '''
    Best of `attempts` initial partitions
    '''
    if k < 1:
        raise InitialPartitionError('Invalid number of blocks: {}'.format(k))
    if k > hypergraph.num_vertices:
        raise TooManyBlocksError('Cannot split {} vertices into {} non-empty blocks'.format(hypergraph.num_vertices, k))
    seed = rng.getrandbits(64)
    best = None
    for attempt in range(max(attempts, 1)):
        attempt_rng = random.Random(derive_seed(seed, 'initial', attempt))
        method = random_balanced if attempt % 2 == 0 else bfs_growing
        partition = Partition(hypergraph, k, epsilon, method(hypergraph, k, attempt_rng))
        if use_fm:
            fm_pass(partition, attempt_rng)
        if best is None or score(partition) < score(best):
            best = partition
        logger.debug('Initial attempt %d (%s): km1 %d, max weight %d.', attempt, method.__name__, partition.km1, partition.max_block_weight())
    logger.info('Initial partition: km1 %d, imbalance %.4f.', best.km1, best.imbalance())
    return best


# pylint: disable=missing-docstring

class InitialPartitionError(HyperflowError):
    pass


class TooManyBlocksError(InitialPartitionError, InputError):
    pass
