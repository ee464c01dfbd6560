'''
Hypergraphs, partitions, objectives, subhypergraphs and the quotient graph
'''

from .hypergraph import Hypergraph
from .partition import Partition, partition_from_blocks
from .metrics import connectivity, km1_metric, cut_metric, imbalance, is_balanced
from .subhypergraph import SubHypergraph, NetClass, induced_subhypergraph
from .quotient_graph import QuotientGraph, PairHistory, quotient_graph
