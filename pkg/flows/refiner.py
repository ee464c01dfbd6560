'''
Flow-based refinement of k-way partitions

refine_pair improves one pair of adjacent blocks with adaptive corridor sizes: it starts with
eps' = alpha' * eps, doubles alpha (up to alpha') after an accepted bipartition and halves
it otherwise, until alpha drops below one.

refine_kway schedules pairs of the quotient graph in rounds: blocks taking part in an
improvement stay active for the next round, the rest are retired.

Speedups:
- S1: on coarse levels from the second invocation of a run on, skip pairs that never improved before
- S2: on coarse levels, skip pairs whose cut weight is below a threshold
- S3: stop the alpha loop when the min cut does not beat the current pair cut
'''

import logging
import time

from hypergraph.metrics import km1_metric
from hypergraph.quotient_graph import PairHistory, quotient_graph
from hypergraph.subhypergraph import induced_subhypergraph
from utils import config
from utils.errors import ConfigError, HyperflowError, InvariantViolationError
from utils.utils import Stopwatch
from .corridor import compute_corridor
from .maxflow import max_flow
from .mincut import BalanceContext, build_pq_dag, extract_bipartition, most_balanced_min_cut
from .network import NetworkVariant
from .problem import FlowModel, build_flow_problem


logger = logging.getLogger(__name__)


class RefinerConfig:
    '''
    Flow refinement settings, defaults from utils.config
    '''

    def __init__(
            self,
            alpha_prime=config.alpha_prime,
            model=config.flow_model,
            network_variant=config.network_variant,
            most_balanced=config.most_balanced,
            mbmc_reps=config.mbmc_reps,
            use_s1=config.use_s1,
            use_s2=config.use_s2,
            use_s3=config.use_s3,
            s2_cut_threshold=config.s2_cut_threshold,
            single_pin_modeling=config.single_pin_modeling,
            max_rounds=config.max_refinement_rounds,
            check_invariants=False,
    ):
        if not isinstance(alpha_prime, int) or alpha_prime < 1 or alpha_prime & (alpha_prime - 1):
            raise InvalidAlphaError('alpha\' must be a power of two, got {}'.format(alpha_prime))
        if mbmc_reps < 1:
            raise ConfigError('MBMC repetitions must be positive, got {}'.format(mbmc_reps))
        if s2_cut_threshold < 0:
            raise ConfigError('S2 threshold must be non-negative, got {}'.format(s2_cut_threshold))
        if max_rounds < 1:
            raise ConfigError('Round ceiling must be positive, got {}'.format(max_rounds))
        self.alpha_prime = alpha_prime
        self.model = FlowModel.parse(model)
        self.network_variant = NetworkVariant.parse(network_variant)
        self.most_balanced = most_balanced
        self.mbmc_reps = mbmc_reps
        self.use_s1 = use_s1
        self.use_s2 = use_s2
        self.use_s3 = use_s3
        self.s2_cut_threshold = s2_cut_threshold
        self.single_pin_modeling = single_pin_modeling
        self.max_rounds = max_rounds
        self.check_invariants = check_invariants

    def __repr__(self):
        return 'RefinerConfig({})'.format(self.fingerprint())

    def fingerprint(self):
        '''
        Stable one-line description of the settings that influence results
        '''
        return 'a{}-{}-{}-mbmc{}x{}-s{}{}{}-t{}-sp{}'.format(
            self.alpha_prime,
            self.model.value,
            self.network_variant.value,
            int(self.most_balanced),
            self.mbmc_reps,
            int(self.use_s1),
            int(self.use_s2),
            int(self.use_s3),
            self.s2_cut_threshold,
            int(self.single_pin_modeling),
        )


class RefinementStats:
    '''
    Counters of one refiner
    '''

    def __init__(self):
        self.flow_calls = 0
        self.flow_timer = Stopwatch()
        self.pair_calls = 0
        self.accepted = 0
        self.rounds = 0
        self.ceiling_hits = 0

    def __repr__(self):
        return 'RefinementStats(flow_calls={}, flow_time={:.3f}, accepted={}, rounds={})'.format(
            self.flow_calls, self.flow_time, self.accepted, self.rounds,
        )

    @property
    def flow_time(self):
        return self.flow_timer.total


class FlowRefiner:
    '''
    Flow refinement engine of one partitioning run; keeps the pair history and statistics
    across multilevel invocations
    '''

    def __init__(self, refiner_config=None):
        self.config = refiner_config or RefinerConfig()
        self.history = PairHistory()
        self.stats = RefinementStats()
        self.invocations = 0
        self.last_alphas = []

    def reset(self):
        self.history.reset()
        self.stats = RefinementStats()
        self.invocations = 0

    def _solve(self, sub, partition, block_i, block_j, rng):
        problem = build_flow_problem(sub, self.config)
        if problem.is_degenerate() and not self.config.most_balanced:
            return problem, None, None
        with self.stats.flow_timer:
            state = max_flow(problem)
            self.stats.flow_calls += 1
            if self.config.most_balanced:
                context = BalanceContext(partition.block_weights, partition.block_sizes, block_i, block_j)
                dag = build_pq_dag(problem, state)
                candidate = most_balanced_min_cut(dag, problem, context, self.config.mbmc_reps, rng)
            else:
                candidate = extract_bipartition(problem, state)
        return problem, state, candidate

    def refine_pair(self, hypergraph, partition, block_i, block_j, rng):
        '''
        Improve the bipartition (V_i, V_j) in place; True if the partition changed
        '''
        cfg = self.config
        self.stats.pair_calls += 1
        self.last_alphas = []
        best_km1 = partition.km1
        best_max = partition.max_block_weight()
        was_balanced = partition.is_balanced()
        changed = False
        alpha = cfg.alpha_prime
        while alpha >= 1:
            self.last_alphas.append(alpha)
            corridor = compute_corridor(hypergraph, partition, block_i, block_j, alpha * partition.epsilon, rng)
            if not corridor.side_i and not corridor.side_j:
                logger.debug('Pair (%d,%d) alpha=%d: empty corridor.', block_i, block_j, alpha)
                alpha //= 2
                continue
            sub = induced_subhypergraph(hypergraph, corridor.members, partition, block_i, block_j)
            problem, state, candidate = self._solve(sub, partition, block_i, block_j, rng)
            if candidate is None:
                logger.debug('Pair (%d,%d) alpha=%d: degenerate problem.', block_i, block_j, alpha)
                alpha //= 2
                continue
            current_cut = problem.cut_weight(problem.current_source_vertices())
            if cfg.use_s3 and state.value >= current_cut and partition.is_balanced():
                logger.debug(
                    'Pair (%d,%d) alpha=%d: min cut %d does not beat %d, stop.',
                    block_i, block_j, alpha, state.value, current_cut,
                )
                break
            moves = {
                sub.vertex_of_local[vertex]: block_i if vertex in candidate.source_side else block_j
                for vertex in range(sub.local.num_vertices)
            }
            previous = partition.assign(moves)
            km1 = partition.km1
            max_weight = partition.max_block_weight()
            accepted = not partition.has_empty_block() and (
                (km1 < best_km1 and max_weight <= partition.l_max)
                or (max_weight < best_max and (km1 <= best_km1 or best_max > partition.l_max))
            )
            logger.debug(
                'Pair (%d,%d) alpha=%d: |B|=%d flow=%d km1 %d -> %d, max weight %d -> %d, %s.',
                block_i, block_j, alpha, len(corridor.members), state.value,
                best_km1, km1, best_max, max_weight, 'accepted' if accepted else 'rejected',
            )
            if accepted:
                if cfg.check_invariants:
                    self._check(hypergraph, partition, best_km1, was_balanced)
                best_km1, best_max = km1, max_weight
                changed = True
                self.stats.accepted += 1
                alpha = min(2 * alpha, cfg.alpha_prime)
            else:
                partition.assign(previous)
                alpha //= 2
        return changed

    def _check(self, hypergraph, partition, previous_km1, was_balanced):
        recomputed = km1_metric(hypergraph, partition)
        if recomputed != partition.km1:
            raise RefinementInvariantError('Maintained km1 {} differs from recomputed {}'.format(partition.km1, recomputed))
        if was_balanced and not partition.is_balanced():
            raise RefinementInvariantError('Accepted refinement breaks the balance constraint')
        if was_balanced and recomputed > previous_km1:
            raise RefinementInvariantError('Accepted refinement increases km1 from {} to {}'.format(previous_km1, recomputed))

    def filters_by_history(self, rounds, finest):
        '''
        True if S1 restricts round `rounds` of this invocation to pairs that improved before

        The finest level always sees every pair.
        '''
        return self.config.use_s1 and not finest and self.invocations > 1 and rounds > 1

    def refine_kway(self, hypergraph, partition, rng, finest=True, deadline=None):
        '''
        Active block scheduling over the quotient graph; True if the partition changed
        '''
        cfg = self.config
        self.invocations += 1
        km1_before = partition.km1
        was_balanced = partition.is_balanced()
        qgraph = quotient_graph(hypergraph, partition, self.history)
        improved = False
        rounds = 0
        while qgraph.has_active_blocks():
            if rounds >= cfg.max_rounds:
                logger.warning('Refinement stopped after %d rounds.', rounds)
                self.stats.ceiling_hits += 1
                break
            if deadline is not None and time.perf_counter() >= deadline:
                logger.info('Refinement time limit reached.')
                break
            rounds += 1
            reactivated = set()
            for block_i, block_j in qgraph.active_pairs():
                if self.filters_by_history(rounds, finest) and not self.history.improved(block_i, block_j):
                    continue
                pair_cut = partition.pair_cut_weight(block_i, block_j)
                if pair_cut == 0:
                    continue
                if cfg.use_s2 and not finest and pair_cut < cfg.s2_cut_threshold:
                    continue
                if self.refine_pair(hypergraph, partition, block_i, block_j, rng):
                    self.history.record(block_i, block_j)
                    reactivated.update((block_i, block_j))
                    improved = True
            logger.debug('Round %d: %d blocks reactivated, km1 %d.', rounds, len(reactivated), partition.km1)
            qgraph = quotient_graph(hypergraph, partition, self.history)
            qgraph.next_round(reactivated)
        self.stats.rounds += rounds
        if cfg.check_invariants and was_balanced and partition.km1 > km1_before:
            raise RefinementInvariantError('Refinement increases km1 from {} to {}'.format(km1_before, partition.km1))
        logger.info('Flow refinement: km1 %d -> %d in %d rounds.', km1_before, partition.km1, rounds)
        return improved


def refine_pair(hypergraph, partition, block_i, block_j, refiner_config, rng, refiner=None):
    refiner = refiner or FlowRefiner(refiner_config)
    return refiner.refine_pair(hypergraph, partition, block_i, block_j, rng)


def refine_kway(hypergraph, partition, refiner_config, rng, refiner=None):
    refiner = refiner or FlowRefiner(refiner_config)
    refiner.refine_kway(hypergraph, partition, rng)
    return partition


# pylint: disable=missing-docstring

class RefinerError(HyperflowError):
    pass


class InvalidAlphaError(RefinerError, ConfigError):
    pass


class RefinementInvariantError(RefinerError, InvariantViolationError):
    pass
