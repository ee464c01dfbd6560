'''
File formats: hMetis hypergraphs, partition files, graph and matrix converters
'''

from .hgr import HgrFormat, HgrHeader, parse_hgr, write_hgr, load_hgr, save_hgr
from .partition_file import read_partition, write_partition, load_partition, save_partition
from .converters import graph_to_hypergraph, parse_metis_graph, parse_coordinate_matrix, matrix_to_hypergraph
