'''
Run records and their CSV files

A runs file starts with a schema comment line, then a CSV header and one row per run.
Floats are written with six decimals so re-aggregation from the file is exact.
'''

from collections import namedtuple
import csv
import io
import logging
import os

from hypergraph.metrics import cut_metric, imbalance, is_balanced, km1_metric
from utils import config
from utils.errors import InputError


logger = logging.getLogger(__name__)


RunRecord = namedtuple('RunRecord', [
    'instance',
    'k',
    'epsilon',
    'config',
    'fingerprint',
    'seed',
    'km1',
    'cut',
    'imbalance',
    'balanced',
    'unachievable',
    'total_time',
    'flow_time',
    'flow_calls',
    'improved',
    'error',
])


TIME_COLUMNS = ('total_time', 'flow_time')
INT_COLUMNS = ('k', 'seed', 'km1', 'cut', 'flow_calls')
FLOAT_COLUMNS = ('imbalance',) + TIME_COLUMNS
FLAG_COLUMNS = ('balanced', 'unachievable', 'improved')


def schema_line():
    return '# hyperflow runs v{}\n'.format(config.csv_schema_version)


def record_of(instance, k, epsilon, config_name, fingerprint, seed, hypergraph, partition,
              unachievable=False, total_time=0.0, flow_time=0.0, flow_calls=0, improved=None):
    '''
    RunRecord with objectives recomputed from scratch

    improved is only known for refine runs; None leaves the column empty.
    '''
    return RunRecord(
        instance,
        k,
        str(epsilon),
        config_name,
        fingerprint,
        seed,
        km1_metric(hypergraph, partition),
        cut_metric(hypergraph, partition),
        round(imbalance(hypergraph, partition), 6),
        is_balanced(hypergraph, partition, partition.epsilon),
        unachievable,
        round(total_time, 6),
        round(flow_time, 6),
        flow_calls,
        improved,
        '',
    )


def error_record(instance, k, epsilon, config_name, seed, message):
    return RunRecord(instance, k, str(epsilon), config_name, '', seed, None, None, None, None, None, None, None, None, None, message)


def _format(record):
    row = []
    for field, value in zip(RunRecord._fields, record):
        if value is None:
            row.append('')
        elif field in FLOAT_COLUMNS:
            row.append('{:.6f}'.format(value))
        elif field in FLAG_COLUMNS:
            row.append('1' if value else '0')
        else:
            row.append(str(value))
    return row


def _parse(row, line_number):
    if len(row) != len(RunRecord._fields):
        raise RecordFormatError('Line {}: expected {} columns, got {}'.format(line_number, len(RunRecord._fields), len(row)))
    values = []
    for field, text in zip(RunRecord._fields, row):
        if text == '' and field != 'error':
            values.append(None if field not in ('instance', 'config', 'fingerprint', 'epsilon') else '')
            continue
        try:
            if field in INT_COLUMNS:
                values.append(int(text))
            elif field in FLOAT_COLUMNS:
                values.append(float(text))
            elif field in FLAG_COLUMNS:
                values.append(text == '1')
            else:
                values.append(text)
        except ValueError:
            raise RecordFormatError('Line {}: invalid {} value: {}'.format(line_number, field, text))
    return RunRecord(*values)


def write_records(stream, records, header=True):
    '''
    Write records as CSV; with header, the schema comment and column names come first
    '''
    if header:
        stream.write(schema_line())
    writer = csv.writer(stream, lineterminator='\n')
    if header:
        writer.writerow(RunRecord._fields)
    for record in records:
        writer.writerow(_format(record))


def format_records(records):
    buffer = io.StringIO()
    write_records(buffer, records)
    return buffer.getvalue()


def append_record(filename, record):
    '''
    Append one row, writing the header first if the file is new or empty
    '''
    new_file = not os.path.exists(filename) or os.path.getsize(filename) == 0
    with open(filename, 'at', newline='') as output_file:
        write_records(output_file, [record], header=new_file)


def read_records(stream):
    '''
    Parse a runs CSV (iterable of lines)
    '''
    if isinstance(stream, str):
        stream = stream.splitlines()
    lines = list(stream)
    if not lines or not lines[0].startswith('#'):
        raise RecordFormatError('Line 1: missing schema line')
    version = lines[0].strip().rsplit('v', 1)[-1]
    if version != str(config.csv_schema_version):
        raise RecordFormatError('Line 1: unsupported schema version {}'.format(version))
    reader = csv.reader(lines[1:])
    records = []
    for offset, row in enumerate(reader):
        line_number = offset + 2
        if offset == 0:
            if tuple(row) != RunRecord._fields:
                raise RecordFormatError('Line {}: unexpected header'.format(line_number))
            continue
        if not row:
            continue
        records.append(_parse(row, line_number))
    return records


def load_records(filename):
    try:
        with open(filename, 'rt', newline='') as input_file:
            return read_records(input_file)
    except OSError as ex:
        raise RecordFormatError('Could not read {}: {}'.format(filename, ex.strerror))


def strip_times(records):
    '''
    Records with wall-clock columns blanked, for determinism checks
    '''
    return [record._replace(**{column: None for column in TIME_COLUMNS}) for record in records]


# pylint: disable=missing-docstring

class RecordFormatError(InputError):
    pass
