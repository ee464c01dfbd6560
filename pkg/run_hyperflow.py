'''
Flow-based hypergraph partitioning: partition, refine, netstats, bench, oracle, convert, corpus

Usage: python run_hyperflow.py [-v] <command> [options]
Exit codes: 0 ok, 1 usage or config error, 2 input error, 3 invariant violation
'''

import logging
import sys

from harness.commands import build_parser
from utils import utils
from utils.errors import ConfigError, HyperflowError, InputError, InvariantViolationError


logger = logging.getLogger(__name__)


def main(argv=None):
    '''
    Entry point of script
    '''
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except ConfigError as ex:
        parser.print_usage(sys.stderr)
        sys.stderr.write('{}\n'.format(ex))
        return 1
    _set_logging(args.verbose)
    try:
        return args.func(args)
    except ConfigError as ex:
        logger.error(ex)
        return 1
    except InputError as ex:
        logger.error(ex)
        return 2
    except InvariantViolationError as ex:
        logger.error(ex)
        return 3
    except HyperflowError as ex:
        logger.error(ex)
        return 3
    except (KeyboardInterrupt, SystemExit):
        return 1


def _set_logging(verbosity):
    levels = {
        'cli': 'IIDD',
        'io': 'WIID',
        'core': 'WWID',
        'net': 'EWID',
        'flow': 'EWID',
        'ref': 'WIDD',
        'ml': 'WIID',
        'fm': 'EWID',
        'orc': 'WIID',
        'bch': 'IIDD',
    }
    if verbosity > 3:
        verbosity = 3
    components = [
        ('__main__', 'Hyperflow', 'cli', None),
        ('harness.commands', 'Hyperflow', 'cli', None),
        ('harness.records', 'Bench', 'bch', '0;36'),
        ('harness.bench', 'Bench', 'bch', '0;36'),
        ('harness.corpus', 'Bench', 'bch', '0;36'),
        ('hgrio.hgr', 'IO', 'io', '0;32'),
        ('hgrio.partition_file', 'IO', 'io', '0;32'),
        ('hgrio.converters', 'IO', 'io', '0;32'),
        ('hypergraph.hypergraph', 'Core', 'core', '1;30'),
        ('hypergraph.partition', 'Core', 'core', '1;30'),
        ('hypergraph.subhypergraph', 'Core', 'core', '1;30'),
        ('hypergraph.quotient_graph', 'Core', 'core', '1;30'),
        ('flows.network', 'Network', 'net', '0;35'),
        ('flows.problem', 'Network', 'net', '0;35'),
        ('flows.maxflow', 'Flow', 'flow', '0;34'),
        ('flows.mincut', 'Flow', 'flow', '0;34'),
        ('flows.corridor', 'Refiner', 'ref', '0;33'),
        ('flows.refiner', 'Refiner', 'ref', '0;33'),
        ('multilevel.coarsening', 'Multilevel', 'ml', '0;37'),
        ('multilevel.initial', 'Multilevel', 'ml', '0;37'),
        ('multilevel.partitioner', 'Multilevel', 'ml', '0;37'),
        ('multilevel.fm', 'FM', 'fm', '1;34'),
        ('oracle.oracle', 'Oracle', 'orc', '1;32'),
    ]
    logconfig = {}
    for logger_name, prefix, component, color in components:
        details = {
            'name': prefix,
            'level': levels[component][verbosity],
            'stream': sys.stderr,
        }
        if color:
            details['color'] = color
        logconfig[logger_name] = details
    utils.config_loggers(logconfig)


if __name__ == '__main__':
    sys.exit(main())
