'''
Benchmark protocol: manifests, named configurations, repeated runs, effectiveness tests and
aggregation into geometric means and improvement ratios
'''

from collections import namedtuple, OrderedDict
import csv
from fractions import Fraction
import logging
import random
import shlex

import numpy as np

from utils import config
from utils.errors import InputError
from utils.utils import derive_seed


logger = logging.getLogger(__name__)


Instance = namedtuple('Instance', ['path', 'k', 'epsilon'])

BenchConfig = namedtuple('BenchConfig', ['name', 'args'])

InstanceSummary = namedtuple('InstanceSummary', [
    'instance', 'k', 'epsilon', 'config', 'runs', 'errors', 'best_km1', 'mean_km1', 'mean_time', 'mean_flow_time',
])

ConfigSummary = namedtuple('ConfigSummary', [
    'config', 'instances', 'gmean_best_km1', 'gmean_mean_km1', 'gmean_time',
])

Improvement = namedtuple('Improvement', ['instance', 'k', 'epsilon', 'config', 'baseline', 'improvement'])


EFFECTIVENESS_SUFFIX = '/eff'


def _nonzero(values):
    '''
    Zero objectives count as one
    '''
    return np.maximum(np.asarray(values, dtype=float), 1.0)


def geometric_mean(values):
    if len(values) == 0:
        return None
    return float(np.exp(np.mean(np.log(_nonzero(values)))))


def improvement(ours, other):
    '''
    1 - ours / other, zeros counted as ones
    '''
    ours, other = _nonzero([ours, other])
    return float(1.0 - ours / other)


def read_manifest(stream):
    '''
    One "path,k,eps" per line; '#' starts a comment
    '''
    if isinstance(stream, str):
        stream = stream.splitlines()
    instances = []
    for line_number, line in enumerate(stream, start=1):
        stripped = line.split('#', 1)[0].strip()
        if not stripped:
            continue
        parts = [part.strip() for part in stripped.split(',')]
        if len(parts) != 3:
            raise ManifestError('Line {}: expected "path,k,eps", got {}'.format(line_number, stripped))
        path, k, epsilon = parts
        try:
            k = int(k)
            Fraction(epsilon)
        except ValueError:
            raise ManifestError('Line {}: invalid k or eps in {}'.format(line_number, stripped))
        if k < 2 or Fraction(epsilon) < 0:
            raise ManifestError('Line {}: k must be >= 2 and eps >= 0'.format(line_number))
        instances.append(Instance(path, k, epsilon))
    return instances


def read_configs(stream):
    '''
    One "name = flags" per line; '#' starts a comment
    '''
    if isinstance(stream, str):
        stream = stream.splitlines()
    configs = []
    names = set()
    for line_number, line in enumerate(stream, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        if '=' not in stripped:
            raise ConfigFileError('Line {}: expected "name = flags"'.format(line_number))
        name, flags = stripped.split('=', 1)
        name = name.strip()
        if not name or name in names:
            raise ConfigFileError('Line {}: missing or duplicate config name {!r}'.format(line_number, name))
        names.add(name)
        configs.append(BenchConfig(name, shlex.split(flags)))
    return configs


def run_bench(instances, configs, runner, reps=config.bench_reps, seed=0, effectiveness=False):
    '''
    Run every config `reps` times on every instance

    runner(instance, bench_config, seed) returns a RunRecord. Rep r uses seed + r for every
    config. With effectiveness, each config then gets a time budget of
    effectiveness_budget_factor times the slowest single run on the instance.
    '''
    records = []
    for instance in instances:
        by_config = OrderedDict()
        for bench_config in configs:
            by_config[bench_config.name] = []
            for rep in range(reps):
                record = runner(instance, bench_config, seed + rep)
                by_config[bench_config.name].append(record)
                records.append(record)
            logger.info('%s k=%d eps=%s %s: %d runs.', instance.path, instance.k, instance.epsilon, bench_config.name, reps)
        if effectiveness:
            records.extend(_effectiveness(instance, configs, runner, by_config, seed, reps))
    return records


def _effectiveness(instance, configs, runner, by_config, seed, reps):
    times = [record.total_time for runs in by_config.values() for record in runs if not record.error]
    if not times:
        return []
    budget = config.effectiveness_budget_factor * max(times)
    records = []
    for bench_config in configs:
        own = [record.total_time for record in by_config[bench_config.name] if not record.error]
        expected = max(float(np.mean(own)) if own else max(times), 1e-9)
        coin = random.Random(derive_seed(seed, 'effectiveness', instance.path, instance.k, instance.epsilon, bench_config.name))
        spent = 0.0
        run = 0
        while spent + expected <= budget:
            record = runner(instance, bench_config, seed + reps + run)
            records.append(record._replace(config=bench_config.name + EFFECTIVENESS_SUFFIX))
            spent += record.total_time or expected
            run += 1
        if coin.random() < (budget - spent) / expected:
            record = runner(instance, bench_config, seed + reps + run)
            records.append(record._replace(config=bench_config.name + EFFECTIVENESS_SUFFIX))
            run += 1
        logger.info('%s %s effectiveness: %d runs within %.3fs.', instance.path, bench_config.name, run, budget)
    return records


def aggregate(records):
    '''
    Per-instance summaries, per-config geometric means and pairwise improvements
    '''
    groups = OrderedDict()
    for record in records:
        key = (record.instance, record.k, record.epsilon, record.config)
        groups.setdefault(key, []).append(record)
    instance_rows = []
    for (instance, k, epsilon, config_name), group in groups.items():
        ok = [record for record in group if not record.error]
        instance_rows.append(InstanceSummary(
            instance, k, epsilon, config_name, len(ok), len(group) - len(ok),
            min(record.km1 for record in ok) if ok else None,
            float(np.mean([record.km1 for record in ok])) if ok else None,
            float(np.mean([record.total_time for record in ok])) if ok else None,
            float(np.mean([record.flow_time for record in ok])) if ok else None,
        ))
    config_names = list(OrderedDict.fromkeys(row.config for row in instance_rows))
    solved = [row for row in instance_rows if row.runs]
    instance_keys = OrderedDict.fromkeys((row.instance, row.k, row.epsilon) for row in solved)
    best = {(row.instance, row.k, row.epsilon, row.config): row for row in solved}
    config_rows = []
    for config_name in config_names:
        rows = [row for row in solved if row.config == config_name]
        config_rows.append(ConfigSummary(
            config_name,
            len(rows),
            geometric_mean([row.best_km1 for row in rows]),
            geometric_mean([row.mean_km1 for row in rows]),
            geometric_mean([row.mean_time for row in rows]),
        ))
    improvement_rows = []
    for ours in config_names:
        for baseline in config_names:
            if ours == baseline:
                continue
            for instance, k, epsilon in instance_keys:
                mine = best.get((instance, k, epsilon, ours))
                theirs = best.get((instance, k, epsilon, baseline))
                if mine is None or theirs is None:
                    continue
                improvement_rows.append(Improvement(
                    instance, k, epsilon, ours, baseline, improvement(mine.best_km1, theirs.best_km1),
                ))
    return instance_rows, config_rows, improvement_rows


def _cell(value):
    if value is None:
        return ''
    if isinstance(value, float):
        return '{:.6f}'.format(value)
    return str(value)


def write_aggregate(stream, instance_rows, config_rows, improvement_rows):
    '''
    Three CSV tables, each introduced by a comment line
    '''
    writer = csv.writer(stream, lineterminator='\n')
    for title, fields, rows in (
            ('instances', InstanceSummary._fields, instance_rows),
            ('configs', ConfigSummary._fields, config_rows),
            ('improvements', Improvement._fields, improvement_rows),
    ):
        stream.write('# {}\n'.format(title))
        writer.writerow(fields)
        for row in rows:
            writer.writerow([_cell(value) for value in row])


# pylint: disable=missing-docstring

class BenchError(InputError):
    pass


class ManifestError(BenchError):
    pass


class ConfigFileError(BenchError):
    pass
