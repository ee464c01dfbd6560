'''
Multilevel driver: coarsening, initial partitioning, FM and the partitioning pipeline
'''

from .coarsening import Hierarchy, coarsen, contract, project
from .initial import initial_partition
from .fm import fm_pass
from .partitioner import PartitionerConfig, PartitionResult, partition
