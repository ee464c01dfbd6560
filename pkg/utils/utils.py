'''
Utils, like ceil_div, derive_seed, config_loggers...
'''

import hashlib
import logging
import time
from fractions import Fraction


def ceil_div(numerator, denominator):
    '''
    Integer ceiling of numerator / denominator
    '''
    return -(-numerator // denominator)


def to_fraction(value):
    '''
    Exact rational value of a user-given number (0.03 means 3/100, not the nearest double)
    '''
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


def derive_seed(seed, *labels):
    '''
    Derive a stable sub-seed from a seed and labels (independent of PYTHONHASHSEED)
    '''
    key = '/'.join([str(seed)] + [str(label) for label in labels])
    digest = hashlib.sha256(key.encode('utf-8')).digest()
    return int.from_bytes(digest[:8], 'big')


class Stopwatch:
    '''
    Accumulating wall-clock timer, usable as a context manager
    '''

    def __init__(self):
        self.total = 0.0
        self._started = None

    def __enter__(self):
        self._started = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.total += time.perf_counter() - self._started
        self._started = None


def config_loggers(logconfig):
    '''
    Give each hyperflow component logger its own stderr handler

    logconfig maps a module name (harness.bench, flows.maxflow, ...) to a dict with
    'name' (message prefix such as Bench or Flow), 'level', an optional ANSI 'color' and
    an optional 'stream'. Loggers stop propagating so every message is printed once.
    '''
    for logname, details in logconfig.items():
        logger = logging.getLogger(logname)
        logger.propagate = False
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
        handler = logging.StreamHandler(stream=details.get('stream'))
        handler.setLevel(logging.DEBUG)
        if details['name']:
            name_prefix = '[{}] '.format(details['name'])
        else:
            name_prefix = ''
        if 'color' in details:
            format_string = '\033[{}m{}%(message)s\033[0m'.format(
                details['color'],
                name_prefix,
            )
        else:
            format_string = '{}%(message)s'.format(
                name_prefix,
            )
        handler.setFormatter(logging.Formatter(format_string))
        logger.addHandler(handler)
        if details['level'] == 'D':
            logger.setLevel(logging.DEBUG)
        elif details['level'] == 'I':
            logger.setLevel(logging.INFO)
        elif details['level'] == 'W':
            logger.setLevel(logging.WARNING)
        elif details['level'] == 'E':
            logger.setLevel(logging.ERROR)
