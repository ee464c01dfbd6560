'''
Partition files: one 0-based block id per line, line i holding the block of vertex i
'''

import logging

from hypergraph.partition import Partition
from utils.errors import InputError


logger = logging.getLogger(__name__)


def read_partition(stream, hypergraph, k, epsilon):
    '''
    Parse a partition file (iterable of lines) into a Partition of `hypergraph`
    '''
    if isinstance(stream, str):
        stream = stream.splitlines()
    blocks = []
    for idx, line in enumerate(stream):
        stripped = line.strip()
        if not stripped or stripped.startswith('%'):
            continue
        try:
            block = int(stripped)
        except ValueError:
            raise PartitionFileError('Line {}: non-numeric block id "{}"'.format(idx + 1, stripped))
        if block < 0 or block >= k:
            raise BlockIdOutOfRangeError('Line {}: block id {} out of range [0,{})'.format(idx + 1, block, k))
        blocks.append(block)
    if len(blocks) != hypergraph.num_vertices:
        raise VertexCountMismatchError('Expected {} block ids, got {}'.format(hypergraph.num_vertices, len(blocks)))
    return Partition(hypergraph, k, epsilon, blocks)


def write_partition(partition):
    '''
    Render block ids, one per line
    '''
    return ''.join('{}\n'.format(block) for block in partition.block_of_vertex)


def load_partition(filename, hypergraph, k, epsilon):
    logger.info('Loading partition %s...', filename)
    try:
        with open(filename, 'rt') as input_file:
            return read_partition(input_file, hypergraph, k, epsilon)
    except OSError as ex:
        raise PartitionFileError('Could not read {}: {}'.format(filename, ex.strerror))


def save_partition(partition, filename):
    with open(filename, 'wt') as output_file:
        output_file.write(write_partition(partition))
    logger.info('Partition written to %s.', filename)


# pylint: disable=missing-docstring

class PartitionFileError(InputError):
    pass


class BlockIdOutOfRangeError(PartitionFileError):
    pass


class VertexCountMismatchError(PartitionFileError):
    pass
