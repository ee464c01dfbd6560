'''
Sub-commands of run_hyperflow.py: partition, refine, netstats, bench, oracle, convert, corpus

Each cmd_* takes the parsed arguments and returns the process exit code.
'''

import argparse
from contextlib import contextmanager
import csv
from fractions import Fraction
import logging
import random
import sys
import time

from flows.corridor import compute_corridor
from flows.network import NetworkVariant, build_network, network_stats
from flows.problem import build_flow_problem
from flows.refiner import FlowRefiner, RefinerConfig
from hgrio.converters import graph_to_hypergraph, matrix_to_hypergraph, parse_coordinate_matrix, parse_metis_graph
from hgrio.hgr import load_hgr, save_hgr
from hgrio.partition_file import load_partition, save_partition
from hypergraph.subhypergraph import induced_subhypergraph
from multilevel.partitioner import PartitionerConfig, partition
from oracle.oracle import brute_best_partition, brute_min_st_cut, counting_oracle
from utils import config
from utils.errors import ConfigError, HyperflowError, InputError
from utils.utils import derive_seed
from .corpus import desk_corpus, write_corpus
from .bench import aggregate, read_configs, read_manifest, run_bench, write_aggregate
from .records import append_record, error_record, load_records, record_of, write_records


logger = logging.getLogger(__name__)


class ArgumentParser(argparse.ArgumentParser):
    '''
    Argument parser raising UsageError instead of exiting
    '''

    def error(self, message):
        raise UsageError('{}: {}'.format(self.prog, message))


def _switch(text):
    if text == 'on':
        return True
    if text == 'off':
        return False
    raise argparse.ArgumentTypeError('expected on or off, got {}'.format(text))


def _epsilon(text):
    try:
        value = Fraction(text)
    except ValueError:
        raise argparse.ArgumentTypeError('invalid epsilon: {}'.format(text))
    if value < 0:
        raise argparse.ArgumentTypeError('epsilon must be non-negative: {}'.format(text))
    return text


def add_refiner_arguments(parser):
    parser.add_argument('--alpha-prime', type=int, default=config.alpha_prime, help='Corridor scaling bound alpha\'')
    parser.add_argument('--flow-model', choices=['graph', 'hypergraph'], default=config.flow_model, help='Source/sink model')
    parser.add_argument('--network', choices=['lawler', 'liu-wong', 'reduced'], default=config.network_variant.replace('_', '-'), help='Flow network')
    parser.add_argument('--mbmc', type=_switch, default=config.most_balanced, help='Most balanced minimum cuts {on|off}')
    parser.add_argument('--mbmc-reps', type=int, default=config.mbmc_reps, help='Sweeps per most balanced minimum cut')
    parser.add_argument('--s1', type=_switch, default=config.use_s1, help='Skip pairs without past improvement {on|off}')
    parser.add_argument('--s2', type=_switch, default=config.use_s2, help='Skip pairs with small cuts on coarse levels {on|off}')
    parser.add_argument('--s3', type=_switch, default=config.use_s3, help='Stop when the min cut does not improve {on|off}')
    parser.add_argument('--s2-threshold', type=int, default=config.s2_cut_threshold, help='S2 cut weight threshold')
    parser.add_argument('--single-pin', type=_switch, default=config.single_pin_modeling, help='Single-pin border net modeling {on|off}')
    parser.add_argument('--check', action='store_true', help='Check invariants after every accepted refinement')


def add_partitioner_arguments(parser):
    add_refiner_arguments(parser)
    parser.add_argument('--flows', type=_switch, default=True, help='Flow refinement {on|off}')
    parser.add_argument('--fm', type=_switch, default=True, help='FM refinement {on|off}')
    parser.add_argument('--flow-levels', type=int, default=None, help='Run flows on the finest L levels only')
    parser.add_argument('--time-limit', type=float, default=None, help='Refinement time limit in seconds')


def config_parser():
    '''
    Parser of the flag bundles in a bench configs file
    '''
    parser = ArgumentParser(prog='config', add_help=False)
    add_partitioner_arguments(parser)
    return parser


def refiner_config(args):
    return RefinerConfig(
        alpha_prime=args.alpha_prime,
        model=args.flow_model,
        network_variant=args.network,
        most_balanced=args.mbmc,
        mbmc_reps=args.mbmc_reps,
        use_s1=args.s1,
        use_s2=args.s2,
        use_s3=args.s3,
        s2_cut_threshold=args.s2_threshold,
        single_pin_modeling=args.single_pin,
        check_invariants=args.check,
    )


def partitioner_config(args, seed):
    return PartitionerConfig(
        seed=seed,
        use_flows=args.flows,
        use_fm=args.fm,
        refiner_config=refiner_config(args),
        flow_levels=args.flow_levels,
        time_limit=args.time_limit,
    )


@contextmanager
def _output(filename):
    if filename is None:
        yield sys.stdout
    else:
        with open(filename, 'wt', newline='') as output_file:
            yield output_file


def _emit_record(record, filename):
    if filename is None:
        write_records(sys.stdout, [record])
    else:
        append_record(filename, record)


def cmd_partition(args):
    hypergraph = load_hgr(args.hgr)
    cfg = partitioner_config(args, args.seed)
    result = partition(hypergraph, args.k, args.eps, cfg)
    if result.unachievable:
        logger.warning('Unachievable balance for k=%d, eps=%s.', args.k, args.eps)
    if args.out:
        save_partition(result.partition, args.out)
    _emit_record(record_of(
        args.hgr, args.k, args.eps, 'partition', cfg.fingerprint(), args.seed, hypergraph, result.partition,
        unachievable=result.unachievable,
        total_time=result.total_time,
        flow_time=result.stats.flow_time,
        flow_calls=result.stats.flow_calls,
    ), args.csv)
    return 0


def cmd_refine(args):
    hypergraph = load_hgr(args.hgr)
    current = load_partition(args.partition, hypergraph, args.k, args.eps)
    refiner = FlowRefiner(refiner_config(args))
    started = time.perf_counter()
    improved = refiner.refine_kway(hypergraph, current, random.Random(derive_seed(args.seed, 'refine')))
    total_time = time.perf_counter() - started
    logger.info('improved=%s', 'true' if improved else 'false')
    if args.out:
        save_partition(current, args.out)
    _emit_record(record_of(
        args.hgr, args.k, args.eps, 'refine', refiner.config.fingerprint(), args.seed, hypergraph, current,
        total_time=total_time,
        flow_time=refiner.stats.flow_time,
        flow_calls=refiner.stats.flow_calls,
        improved=improved,
    ), args.csv)
    return 0


def netstats_rows(instance, hypergraph, corridor_size, seed):
    '''
    (instance, variant, nodes, arcs, infinite_arcs) of every network on one corridor
    '''
    if corridor_size > hypergraph.num_vertices:
        logger.warning('Corridor size %d clamped to %d vertices.', corridor_size, hypergraph.num_vertices)
        corridor_size = hypergraph.num_vertices
    quick = partition(hypergraph, 2, '0.03', PartitionerConfig(seed=seed, use_flows=False))
    bipartition = quick.partition
    corridor = compute_corridor(
        hypergraph, bipartition, 0, 1, 0, random.Random(derive_seed(seed, 'corridor')), max_vertices=corridor_size,
    )
    if len(corridor.members) < corridor_size:
        grown = set(corridor.members)
        for vertex in range(hypergraph.num_vertices):
            if len(grown) >= corridor_size:
                break
            grown.add(vertex)
        corridor = corridor._replace(members=frozenset(grown))
    sub = induced_subhypergraph(hypergraph, corridor.members, bipartition, 0, 1)
    rows = []
    for variant in NetworkVariant:
        rows.append((instance, variant.value) + tuple(network_stats(build_network(sub, variant))))
    for single_pin in (False, True):
        cfg = RefinerConfig(model='hypergraph', network_variant='reduced', single_pin_modeling=single_pin)
        stats = network_stats(build_flow_problem(sub, cfg).network)
        rows.append((instance, 'reduced+fh' + ('+single-pin' if single_pin else '')) + tuple(stats))
    return rows


def cmd_netstats(args):
    hypergraph = load_hgr(args.hgr)
    rows = netstats_rows(args.hgr, hypergraph, args.corridor_size, args.seed)
    with _output(args.csv) as stream:
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(('instance', 'variant', 'nodes', 'arcs', 'infinite_arcs'))
        writer.writerows(rows)
    return 0


def bench_runner(check=False):
    '''
    runner(instance, bench_config, seed) for run_bench, loading each hypergraph once
    '''
    cache = {}

    def run(instance, bench_config, seed):
        try:
            if instance.path not in cache:
                cache[instance.path] = load_hgr(instance.path)
            hypergraph = cache[instance.path]
            flags = config_parser().parse_args(bench_config.args)
            flags.check = flags.check or check
            cfg = partitioner_config(flags, seed)
            result = partition(hypergraph, instance.k, instance.epsilon, cfg)
        except InputError as ex:
            logger.error('%s: %s', instance.path, ex)
            return error_record(instance.path, instance.k, instance.epsilon, bench_config.name, seed, str(ex))
        return record_of(
            instance.path, instance.k, instance.epsilon, bench_config.name, cfg.fingerprint(), seed,
            hypergraph, result.partition,
            unachievable=result.unachievable,
            total_time=result.total_time,
            flow_time=result.stats.flow_time,
            flow_calls=result.stats.flow_calls,
        )

    return run


def _read_file(filename, reader):
    try:
        with open(filename, 'rt') as input_file:
            return reader(input_file)
    except OSError as ex:
        raise BenchInputError('Could not read {}: {}'.format(filename, ex.strerror))


def cmd_bench(args):
    if args.aggregate:
        records = load_records(args.aggregate)
    else:
        if not args.manifest or not args.configs:
            raise UsageError('bench: --manifest and --configs are required unless --aggregate is given')
        instances = _read_file(args.manifest, read_manifest)
        configs = _read_file(args.configs, read_configs)
        for bench_config in configs:
            flags = config_parser().parse_args(bench_config.args)
            partitioner_config(flags, args.seed)
        records = run_bench(
            instances, configs, bench_runner(args.check), reps=args.reps, seed=args.seed, effectiveness=args.effectiveness,
        )
        with _output(args.out) as stream:
            write_records(stream, records)
    with _output(args.summary) as stream:
        write_aggregate(stream, *aggregate(records))
    return 0


def cmd_oracle(args):
    hypergraph = load_hgr(args.hgr)
    lines = []
    if args.source is not None or args.sink is not None:
        if args.source is None or args.sink is None:
            raise UsageError('oracle: --source and --sink go together')
        weight, side = brute_min_st_cut(hypergraph, args.source - 1, args.sink - 1)
        lines.append('min_st_cut,{}'.format(weight))
        lines.append('source_side,{}'.format(' '.join(str(vertex + 1) for vertex in sorted(side))))
    if args.k is not None:
        km1, blocks = brute_best_partition(hypergraph, args.k, args.eps)
        lines.append('best_km1,{}'.format('' if km1 is None else km1))
        lines.append('blocks,{}'.format('' if blocks is None else ' '.join(str(block) for block in blocks)))
    if args.counts:
        sub = induced_subhypergraph(hypergraph, range(hypergraph.num_vertices))
        for variant in NetworkVariant:
            stats = counting_oracle(sub, variant)
            lines.append('{},{},{},{}'.format(variant.value, stats.num_nodes, stats.num_arcs, stats.num_infinite_arcs))
    for line in lines:
        print(line)
    return 0


def cmd_convert(args):
    if (args.graph is None) == (args.matrix is None):
        raise UsageError('convert: give exactly one of --graph and --matrix')
    if args.graph is not None:
        num_vertices, edges, edge_weights, vertex_weights = _read_file(args.graph, parse_metis_graph)
        hypergraph = graph_to_hypergraph(edges, num_vertices, edge_weights, vertex_weights, merge_parallel=args.merge_parallel)
    else:
        num_rows, num_cols, entries = _read_file(args.matrix, parse_coordinate_matrix)
        hypergraph = matrix_to_hypergraph(num_rows, num_cols, entries)
    save_hgr(hypergraph, args.out)
    logger.info('%d vertices, %d nets written to %s.', hypergraph.num_vertices, hypergraph.num_nets, args.out)
    return 0


def cmd_corpus(args):
    corpus = desk_corpus(args.seed, args.count, args.min_vertices, args.max_vertices)
    manifest = write_corpus(corpus, args.out, args.k, args.eps)
    print(manifest)
    return 0


def build_parser():
    '''
    Top-level parser with one sub-parser per command
    '''
    parser = ArgumentParser(prog='run_hyperflow.py', description='Flow-based hypergraph partitioning')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='Verbosity')
    subparsers = parser.add_subparsers(dest='command', parser_class=ArgumentParser)
    subparsers.required = True

    sub = subparsers.add_parser('partition', help='Multilevel k-way partitioning')
    sub.add_argument('--hgr', required=True, help='Hypergraph file')
    sub.add_argument('--k', type=int, required=True, help='Number of blocks')
    sub.add_argument('--eps', type=_epsilon, default='0.03', help='Imbalance')
    sub.add_argument('--seed', type=int, default=0, help='Random seed')
    sub.add_argument('--out', help='Partition file to write')
    sub.add_argument('--csv', help='Runs CSV to append to (default: stdout)')
    add_partitioner_arguments(sub)
    sub.set_defaults(func=cmd_partition)

    sub = subparsers.add_parser('refine', help='Flow refinement of a given partition')
    sub.add_argument('--hgr', required=True, help='Hypergraph file')
    sub.add_argument('--partition', required=True, help='Partition file')
    sub.add_argument('--k', type=int, required=True, help='Number of blocks')
    sub.add_argument('--eps', type=_epsilon, default='0.03', help='Imbalance')
    sub.add_argument('--seed', type=int, default=0, help='Random seed')
    sub.add_argument('--out', help='Partition file to write')
    sub.add_argument('--csv', help='Runs CSV to append to (default: stdout)')
    add_refiner_arguments(sub)
    sub.set_defaults(func=cmd_refine)

    sub = subparsers.add_parser('netstats', help='Flow network sizes on a corridor around a bipartition')
    sub.add_argument('--hgr', required=True, help='Hypergraph file')
    sub.add_argument('--corridor-size', type=int, default=config.default_corridor_size, help='Corridor vertices')
    sub.add_argument('--seed', type=int, default=0, help='Random seed')
    sub.add_argument('--csv', help='Output CSV (default: stdout)')
    sub.set_defaults(func=cmd_netstats)

    sub = subparsers.add_parser('bench', help='Benchmark configurations over a manifest')
    sub.add_argument('--manifest', help='File of "path,k,eps" lines')
    sub.add_argument('--configs', help='File of "name = flags" lines')
    sub.add_argument('--reps', type=int, default=config.bench_reps, help='Runs per instance and config')
    sub.add_argument('--seed', type=int, default=0, help='Seed of the first run')
    sub.add_argument('--effectiveness', type=_switch, default=False, help='Effectiveness tests {on|off}')
    sub.add_argument('--check', action='store_true', help='Check invariants in every run')
    sub.add_argument('--out', help='Runs CSV (default: stdout)')
    sub.add_argument('--summary', help='Aggregate CSV (default: stdout)')
    sub.add_argument('--aggregate', help='Re-aggregate an existing runs CSV')
    sub.set_defaults(func=cmd_bench)

    sub = subparsers.add_parser('oracle', help='Brute-force references for small instances')
    sub.add_argument('--hgr', required=True, help='Hypergraph file')
    sub.add_argument('--source', type=int, help='Source vertex (1-based)')
    sub.add_argument('--sink', type=int, help='Sink vertex (1-based)')
    sub.add_argument('--k', type=int, help='Number of blocks for the best partition')
    sub.add_argument('--eps', type=_epsilon, default='0.03', help='Imbalance')
    sub.add_argument('--counts', action='store_true', help='Network sizes from the counting formulas')
    sub.set_defaults(func=cmd_oracle)

    sub = subparsers.add_parser('convert', help='Graph or matrix to hMetis hypergraph')
    sub.add_argument('--graph', help='METIS graph file')
    sub.add_argument('--matrix', help='Coordinate matrix file (row-net model)')
    sub.add_argument('--merge-parallel', action='store_true', help='Merge parallel edges')
    sub.add_argument('--out', required=True, help='Hypergraph file to write')
    sub.set_defaults(func=cmd_convert)

    sub = subparsers.add_parser('corpus', help='Write the seeded desk corpus and its manifest')
    sub.add_argument('--out', required=True, help='Output directory')
    sub.add_argument('--count', type=int, default=config.corpus_size, help='Number of instances')
    sub.add_argument('--seed', type=int, default=config.corpus_seed, help='Corpus seed')
    sub.add_argument('--min-vertices', type=int, default=config.corpus_min_vertices, help='Smallest instance')
    sub.add_argument('--max-vertices', type=int, default=config.corpus_max_vertices, help='Largest instance')
    sub.add_argument('--k', type=int, nargs='+', default=[2, 4, 8], help='Block counts of the manifest')
    sub.add_argument('--eps', type=_epsilon, nargs='+', default=['0.01', '0.03', '0.05'], help='Imbalances of the manifest')
    sub.set_defaults(func=cmd_corpus)
    return parser


# pylint: disable=missing-docstring

class UsageError(ConfigError):
    pass


class BenchInputError(InputError):
    pass
