'''
Multilevel partitioning: coarsen, partition the coarsest level, then project level by level
running flow refinement and FM on each
'''

from collections import namedtuple
import logging
import random
import time

from flows.refiner import FlowRefiner, RefinerConfig
from hypergraph.partition import Partition
from utils import config
from utils.errors import ConfigError, HyperflowError
from utils.utils import derive_seed, to_fraction
from .coarsening import coarsen
from .fm import fm_pass
from .initial import TooManyBlocksError, initial_partition


logger = logging.getLogger(__name__)


PartitionResult = namedtuple('PartitionResult', [
    'partition',
    'balanced',
    'unachievable',  # no eps-balanced partition exists or none was found
    'levels',
    'stats',  # RefinementStats of the flow refiner
    'total_time',
])


class PartitionerConfig:
    '''
    Multilevel settings; flows / FM switches and the flow refiner config
    '''

    def __init__(
            self,
            seed=0,
            use_flows=True,
            use_fm=True,
            refiner_config=None,
            flow_levels=None,
            time_limit=None,
            coarsening_target=None,
            initial_attempts=config.initial_attempts,
            fm_max_passes=config.fm_max_passes,
            fm_max_fruitless=config.fm_max_fruitless_moves,
    ):
        if flow_levels is not None and flow_levels < 0:
            raise ConfigError('Flow levels must be non-negative, got {}'.format(flow_levels))
        if time_limit is not None and time_limit <= 0:
            raise ConfigError('Time limit must be positive, got {}'.format(time_limit))
        if coarsening_target is not None and coarsening_target < 1:
            raise ConfigError('Coarsening target must be positive, got {}'.format(coarsening_target))
        if initial_attempts < 1:
            raise ConfigError('Initial attempts must be positive, got {}'.format(initial_attempts))
        self.seed = seed
        self.use_flows = use_flows
        self.use_fm = use_fm
        self.refiner_config = refiner_config or RefinerConfig()
        self.flow_levels = flow_levels
        self.time_limit = time_limit
        self.coarsening_target = coarsening_target
        self.initial_attempts = initial_attempts
        self.fm_max_passes = fm_max_passes
        self.fm_max_fruitless = fm_max_fruitless

    def __repr__(self):
        return 'PartitionerConfig({})'.format(self.fingerprint())

    def fingerprint(self):
        '''
        Configuration triple (flows, MBMC, FM) followed by the refiner settings
        '''
        return '{}F{}M{}FM/{}{}'.format(
            '+' if self.use_flows else '-',
            '+' if self.use_flows and self.refiner_config.most_balanced else '-',
            '+' if self.use_fm else '-',
            self.refiner_config.fingerprint(),
            '' if self.flow_levels is None else '/L{}'.format(self.flow_levels),
        )

    def target_vertices(self, k):
        if self.coarsening_target is not None:
            return self.coarsening_target
        return max(config.coarsening_target_per_block * k, config.min_coarsening_target)


def partition(hypergraph, k, epsilon, partitioner_config=None):
    '''
    Multilevel k-way partition of hypergraph
    '''
    cfg = partitioner_config or PartitionerConfig()
    if k < 2:
        raise TooFewBlocksError('Need at least two blocks, got {}'.format(k))
    if to_fraction(epsilon) < 0:
        raise NegativeEpsilonError('Negative epsilon: {}'.format(epsilon))
    if k > hypergraph.num_vertices:
        raise TooManyBlocksError('Cannot split {} vertices into {} non-empty blocks'.format(hypergraph.num_vertices, k))
    started = time.perf_counter()
    deadline = started + cfg.time_limit if cfg.time_limit is not None else None
    hierarchy = coarsen(hypergraph, cfg.target_vertices(k), random.Random(derive_seed(cfg.seed, 'coarsen')))
    current = initial_partition(
        hierarchy.hypergraphs[hierarchy.coarsest],
        k,
        epsilon,
        random.Random(derive_seed(cfg.seed, 'initial')),
        attempts=cfg.initial_attempts,
        use_fm=cfg.use_fm,
    )
    refiner = FlowRefiner(cfg.refiner_config)
    refine_rng = random.Random(derive_seed(cfg.seed, 'refine'))
    for level in range(hierarchy.coarsest, -1, -1):
        level_hypergraph = hierarchy.hypergraphs[level]
        if level < hierarchy.coarsest:
            blocks = hierarchy.project(level + 1, current.block_of_vertex)
            current = Partition(level_hypergraph, k, epsilon, blocks, allow_empty=True)
        km1_before = current.km1
        if deadline is not None and time.perf_counter() >= deadline:
            continue
        if cfg.use_flows and (cfg.flow_levels is None or level < cfg.flow_levels):
            refiner.refine_kway(level_hypergraph, current, refine_rng, finest=(level == 0), deadline=deadline)
        if cfg.use_fm:
            fm_pass(current, refine_rng, cfg.fm_max_passes, cfg.fm_max_fruitless)
        logger.info('Level %d (%d vertices): km1 %d -> %d.', level, level_hypergraph.num_vertices, km1_before, current.km1)
    balanced = current.is_balanced()
    heaviest = max(hypergraph.vertex_weights) if hypergraph.num_vertices else 0
    unachievable = not balanced or heaviest > current.l_max
    if unachievable:
        logger.warning('Balance %s not achieved: heaviest block %d > %s.', epsilon, current.max_block_weight(), current.l_max)
    return PartitionResult(
        current,
        balanced,
        unachievable,
        hierarchy.num_levels,
        refiner.stats,
        time.perf_counter() - started,
    )


# pylint: disable=missing-docstring

class PartitionerError(HyperflowError):
    pass


class TooFewBlocksError(PartitionerError, ConfigError):
    pass


class NegativeEpsilonError(PartitionerError, ConfigError):
    pass
