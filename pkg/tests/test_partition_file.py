import os
import tempfile
import unittest

from hgrio.partition_file import (
    read_partition, write_partition, load_partition, save_partition,
    PartitionFileError, BlockIdOutOfRangeError, VertexCountMismatchError,
)
from hypergraph.partition import Partition

from tests.fixtures import h0


class TestPartitionFile(unittest.TestCase):

    def setUp(self):
        self.hypergraph = h0()

    def test_read(self):
        partition = read_partition('0\n0\n1\n1\n', self.hypergraph, 2, 0.03)
        self.assertListEqual(partition.block_of_vertex, [0, 0, 1, 1])
        self.assertEqual(partition.km1, 2)

    def test_write(self):
        partition = Partition(self.hypergraph, 2, 0, [0, 1, 0, 1])
        self.assertEqual(write_partition(partition), '0\n1\n0\n1\n')

    def test_block_out_of_range(self):
        with self.assertRaises(BlockIdOutOfRangeError) as context:
            read_partition('0\n2\n1\n1\n', self.hypergraph, 2, 0)
        self.assertIn('Line 2', str(context.exception))

    def test_vertex_count_mismatch(self):
        with self.assertRaises(VertexCountMismatchError):
            read_partition('0\n1\n', self.hypergraph, 2, 0)

    def test_non_numeric(self):
        with self.assertRaises(PartitionFileError):
            read_partition('0\na\n1\n1\n', self.hypergraph, 2, 0)

    def test_save_and_load(self):
        partition = Partition(self.hypergraph, 2, 0, [1, 0, 0, 1])
        with tempfile.TemporaryDirectory() as directory:
            filename = os.path.join(directory, 'h0.part')
            save_partition(partition, filename)
            loaded = load_partition(filename, self.hypergraph, 2, 0)
        self.assertListEqual(loaded.block_of_vertex, [1, 0, 0, 1])

    def test_missing_file(self):
        with self.assertRaises(PartitionFileError):
            load_partition('/nonexistent/h0.part', self.hypergraph, 2, 0)
