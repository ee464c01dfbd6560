import os
import random
import tempfile
import unittest

from flows.maxflow import max_flow
from flows.mincut import BalanceContext, build_pq_dag, bipartition_of_nodes, extract_bipartition, most_balanced_min_cut
from flows.network import NetworkVariant, build_network, network_stats
from flows.problem import build_flow_problem, build_terminal_problem
from flows.refiner import FlowRefiner, RefinerConfig
from harness.bench import BenchConfig, Instance, geometric_mean, run_bench
from harness.commands import bench_runner
from harness.corpus import desk_corpus
from harness.records import strip_times
from hgrio.hgr import save_hgr
from hypergraph.hypergraph import Hypergraph
from hypergraph.partition import Partition
from hypergraph.subhypergraph import induced_subhypergraph
from multilevel.partitioner import PartitionerConfig, partition
from oracle.oracle import brute_best_partition, brute_min_st_cut, enumerate_network_min_cuts
from utils import config

from tests.fixtures import grid_graph_hypergraph, random_corpus, random_hypergraph


def separated_weight(hypergraph, side):
    return sum(
        weight for pins, weight in zip(hypergraph.pins_of_net, hypergraph.net_weights)
        if any(pin in side for pin in pins) and any(pin not in side for pin in pins)
    )


def terminal_instances(seed, count):
    rng = random.Random(seed)
    for hypergraph in random_corpus(seed, count):
        source, sink = rng.sample(range(hypergraph.num_vertices), 2)
        yield hypergraph, source, sink


def heaviest_block_after(partition, sub, source_side):
    '''
    Heaviest block once the corridor is reassigned, None if block i or j runs empty
    '''
    weights = list(partition.block_weights)
    sizes = list(partition.block_sizes)
    for local, vertex in enumerate(sub.vertex_of_local):
        old = partition.block_of_vertex[vertex]
        new = sub.block_i if local in source_side else sub.block_j
        if old != new:
            weight = partition.hypergraph.vertex_weights[vertex]
            weights[old] -= weight
            weights[new] += weight
            sizes[old] -= 1
            sizes[new] += 1
    if sizes[sub.block_i] == 0 or sizes[sub.block_j] == 0:
        return None
    return max(weights)


def corridor_instances(seed, count, max_inner_nodes=config.oracle_max_network_nodes):
    rng = random.Random(seed)
    found = []
    for _ in range(50 * count):
        if len(found) == count:
            break
        num_vertices = rng.randint(4, 8)
        hypergraph = random_hypergraph(rng, num_vertices, rng.randint(2, 6), max_net_size=4, weighted_vertices=True)
        blocks = [rng.randint(0, 1) for _ in range(num_vertices)]
        if len(set(blocks)) < 2:
            continue
        members = [vertex for vertex in range(num_vertices) if rng.random() < 0.6]
        if not members or len(members) == num_vertices:
            continue
        current = Partition(hypergraph, 2, '0.5', blocks)
        sub = induced_subhypergraph(hypergraph, members, current, 0, 1)
        problem = build_flow_problem(sub, RefinerConfig())
        if problem.is_degenerate() or problem.network.num_nodes - 2 > max_inner_nodes:
            continue
        found.append((current, sub, problem))
    return found


class TestMinCutEquivalence(unittest.TestCase):

    def test_variants_match_brute_force(self):
        for hypergraph, source, sink in terminal_instances(1, 500):
            expected, _ = brute_min_st_cut(hypergraph, source, sink)
            sub = induced_subhypergraph(hypergraph, range(hypergraph.num_vertices))
            for variant in NetworkVariant:
                problem = build_terminal_problem(sub, variant, {source}, {sink})
                self.assertEqual(max_flow(problem).value, expected, (hypergraph, source, sink, variant))

    def test_extraction_cuts_the_flow_value(self):
        for hypergraph, source, sink in terminal_instances(2, 500):
            sub = induced_subhypergraph(hypergraph, range(hypergraph.num_vertices))
            for variant in NetworkVariant:
                problem = build_terminal_problem(sub, variant, {source}, {sink})
                state = max_flow(problem)
                bipartition = extract_bipartition(problem, state)
                self.assertIn(source, bipartition.source_side)
                self.assertNotIn(sink, bipartition.source_side)
                self.assertEqual(bipartition.cut_weight, state.value)
                self.assertEqual(separated_weight(hypergraph, bipartition.source_side), state.value)

    def test_corridor_extraction_cuts_the_flow_value(self):
        for _, _, problem in corridor_instances(3, 200, max_inner_nodes=200):
            state = max_flow(problem)
            self.assertEqual(extract_bipartition(problem, state).cut_weight, state.value)


class TestMostBalancedQuality(unittest.TestCase):

    def test_sweep_reaches_best_balance(self):
        considered = 0
        hits = 0
        for current, sub, problem in corridor_instances(4, 200):
            state = max_flow(problem)
            scores = []
            for nodes, _ in enumerate_network_min_cuts(problem.network, {problem.source}, {problem.sink}):
                bipartition = bipartition_of_nodes(problem, nodes, state.value)
                scores.append(heaviest_block_after(current, sub, bipartition.source_side))
            feasible = [score for score in scores if score is not None]
            context = BalanceContext(current.block_weights, current.block_sizes, 0, 1)
            found = []
            for seed in range(8):
                dag = build_pq_dag(problem, state)
                bipartition = most_balanced_min_cut(dag, problem, context, config.mbmc_reps, random.Random(seed))
                self.assertEqual(bipartition.cut_weight, state.value)
                found.append(heaviest_block_after(current, sub, bipartition.source_side))
            if not feasible:
                continue
            considered += 1
            if min(feasible) in found:
                hits += 1
        self.assertGreater(considered, 100)
        self.assertGreaterEqual(hits, 0.95 * considered)


class TestCutProperty(unittest.TestCase):

    def test_partitioner_runs(self):
        corpus = random_corpus(5, 12) + [grid_graph_hypergraph(6, 6)]
        for k in (2, 4, 8):
            for epsilon in ('0.01', '0.03', '0.05'):
                cfg = PartitionerConfig(seed=k, refiner_config=RefinerConfig(check_invariants=True))
                for hypergraph in corpus:
                    if hypergraph.num_vertices < k:
                        continue
                    result = partition(hypergraph, k, epsilon, cfg)
                    self.assertTrue(result.unachievable or result.partition.is_balanced())

    def test_refinement_of_balanced_partitions(self):
        rng = random.Random(6)
        for hypergraph in random_corpus(6, 30):
            for k in (2, 4, 8):
                if hypergraph.num_vertices < k:
                    continue
                order = list(range(hypergraph.num_vertices))
                rng.shuffle(order)
                blocks = [0] * hypergraph.num_vertices
                for position, vertex in enumerate(order):
                    blocks[vertex] = position % k
                for epsilon in ('0.01', '0.03', '0.05'):
                    current = Partition(hypergraph, k, epsilon, blocks)
                    before = current.km1
                    FlowRefiner(RefinerConfig(check_invariants=True)).refine_kway(hypergraph, current, random.Random(k))
                    self.assertLessEqual(current.km1, before)
                    self.assertTrue(current.is_balanced())


class TestNetworkSizes(unittest.TestCase):

    def test_two_pin_nets_shrink_arcs(self):
        sub = induced_subhypergraph(grid_graph_hypergraph(5, 5), range(25))
        lawler = network_stats(build_network(sub, NetworkVariant.LAWLER))
        liu_wong = network_stats(build_network(sub, NetworkVariant.LIU_WONG))
        self.assertLess(liu_wong.num_arcs, lawler.num_arcs)
        self.assertEqual(liu_wong.num_nodes, 25)

    def test_low_degree_vertices_shrink_nodes(self):
        hypergraph = Hypergraph(9, [
            [0, 1, 2], [3, 4, 5], [6, 7, 8], [0, 3, 6], [1, 4, 7], [2, 5, 8],
        ])
        sub = induced_subhypergraph(hypergraph, range(9))
        liu_wong = network_stats(build_network(sub, NetworkVariant.LIU_WONG))
        reduced = network_stats(build_network(sub, NetworkVariant.REDUCED))
        self.assertLess(reduced.num_nodes, liu_wong.num_nodes)

    def test_single_pin_modeling(self):
        hypergraph = Hypergraph(10, [[vertex, vertex + 1] for vertex in range(9)])
        current = Partition(hypergraph, 2, '0.03', [0] * 4 + [1] * 6)
        sub = induced_subhypergraph(hypergraph, {3, 4, 5, 6}, current, 0, 1)
        sizes = []
        for single_pin in (False, True):
            cfg = RefinerConfig(network_variant='liu_wong', single_pin_modeling=single_pin)
            stats = network_stats(build_flow_problem(sub, cfg).network)
            sizes.append(stats.num_nodes + stats.num_arcs)
        self.assertLess(sizes[1], sizes[0])


class TestToyOptimality(unittest.TestCase):

    def test_reaches_brute_force_optimum(self):
        corpus = random_corpus(8, 30, max_vertices=9)
        reached = 0
        for hypergraph in corpus:
            best, _ = brute_best_partition(hypergraph, 2, '0.03')
            found = [
                partition(hypergraph, 2, '0.03', PartitionerConfig(seed=seed)).partition.km1
                for seed in range(10)
            ]
            self.assertTrue(all(km1 >= best for km1 in found))
            if best in found:
                reached += 1
        self.assertGreaterEqual(reached, 0.9 * len(corpus))


class TestBenchDeterminism(unittest.TestCase):

    def test_identical_records(self):
        with tempfile.TemporaryDirectory() as directory:
            instances = []
            for index, hypergraph in enumerate(random_corpus(9, 3, max_vertices=10)):
                filename = os.path.join(directory, 'h{}.hgr'.format(index))
                save_hgr(hypergraph, filename)
                instances.append(Instance(filename, 2, '0.03'))
            configs = [BenchConfig('full', []), BenchConfig('graph', ['--flow-model', 'graph', '--mbmc', 'off'])]
            first = run_bench(instances, configs, bench_runner(), reps=2, seed=3)
            second = run_bench(instances, configs, bench_runner(), reps=2, seed=3)
        self.assertListEqual(strip_times(first), strip_times(second))
        self.assertEqual(len(first), 12)


class TestFlowModelComparison(unittest.TestCase):

    def test_hypergraph_model_not_worse(self):
        corpus = desk_corpus()
        self.assertGreaterEqual(len(corpus), 30)
        for epsilon in ('0.01', '0.03', '0.05'):
            starts = [
                partition(instance.hypergraph, 2, epsilon, PartitionerConfig(seed=index, use_flows=False, use_fm=False)).partition
                for index, instance in enumerate(corpus)
            ]
            for alpha_prime in (1, 2, 4, 8, 16):
                km1 = {}
                for model in ('hypergraph', 'graph'):
                    cfg = RefinerConfig(alpha_prime=alpha_prime, model=model, most_balanced=False)
                    values = []
                    for index, (instance, start) in enumerate(zip(corpus, starts)):
                        current = start.copy()
                        FlowRefiner(cfg).refine_kway(instance.hypergraph, current, random.Random(index))
                        values.append(current.km1)
                    km1[model] = geometric_mean(values)
                self.assertLessEqual(km1['hypergraph'], km1['graph'], 'alpha\'={} eps={}'.format(alpha_prime, epsilon))


class TestConfigurationAblation(unittest.TestCase):

    def test_ordering(self):
        corpus = desk_corpus()
        configs = {
            'flows+mbmc+fm': dict(use_flows=True, refiner_config=RefinerConfig(alpha_prime=16, most_balanced=True)),
            'flows+fm': dict(use_flows=True, refiner_config=RefinerConfig(alpha_prime=16, most_balanced=False)),
            'fm': dict(use_flows=False),
        }
        km1 = {}
        for name, options in configs.items():
            values = []
            for instance in corpus:
                for seed in (0, 1, 2):
                    cfg = PartitionerConfig(seed=seed, coarsening_target=48, **options)
                    values.append(partition(instance.hypergraph, 4, '0.03', cfg).partition.km1)
            km1[name] = geometric_mean(values)
        self.assertLessEqual(km1['flows+mbmc+fm'], km1['flows+fm'])
        self.assertLessEqual(km1['flows+fm'], km1['fm'])


class TestSpeedupHeuristics(unittest.TestCase):

    def test_fewer_flow_calls_same_quality(self):
        corpus = desk_corpus()
        configs = {
            'on': RefinerConfig(use_s1=True, use_s2=True, use_s3=True),
            'off': RefinerConfig(use_s1=False, use_s2=False, use_s3=False),
        }
        km1 = {}
        calls = {}
        for name, refiner_config in configs.items():
            values = []
            calls[name] = 0
            for instance in corpus:
                for seed in (0, 1):
                    cfg = PartitionerConfig(seed=seed, coarsening_target=48, refiner_config=refiner_config)
                    result = partition(instance.hypergraph, 8, '0.03', cfg)
                    values.append(result.partition.km1)
                    calls[name] += result.stats.flow_calls
            km1[name] = geometric_mean(values)
        self.assertLessEqual(calls['on'], 0.75 * calls['off'])
        self.assertLessEqual(km1['on'], 1.01 * km1['off'])
