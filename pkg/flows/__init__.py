'''
Flow networks, max flow, minimum cuts and flow-based refinement
'''

from .network import (
    INFINITE,
    FlowNetwork,
    NetworkStats,
    NetworkVariant,
    NodeType,
    build_lawler,
    build_liu_wong,
    build_network,
    build_reduced,
    network_stats,
)
from .problem import FlowModel, FlowProblem, build_flow_problem, build_terminal_problem
from .maxflow import FlowState, max_flow, residual_reachable, residual_reaching_sink
from .mincut import LocalBipartition, PQDag, build_pq_dag, extract_bipartition, most_balanced_min_cut
from .corridor import Corridor, compute_corridor
from .refiner import FlowRefiner, RefinerConfig, refine_kway, refine_pair
