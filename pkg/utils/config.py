'''
System config: defaults for the partitioner, the flow refiner and the harness
'''


# Flow refinement

alpha_prime = 16
flow_model = 'hypergraph'  # graph | hypergraph
network_variant = 'reduced'  # lawler | liu_wong | reduced
most_balanced = True
mbmc_reps = 8
single_pin_modeling = True
use_s1 = True
use_s2 = True
use_s3 = True
s2_cut_threshold = 10
max_refinement_rounds = 10000  # ceiling per refine_kway call, never hit on the desk corpus


# Multilevel

min_coarsening_target = 160
coarsening_target_per_block = 2
coarse_vertex_weight_factor = 3
coarsening_stall_ratio = 0.95  # level shrinking less than this falls back to random matching
coarsening_large_net = 1000  # nets larger than this are ignored when rating pairs
initial_attempts = 20
fm_max_fruitless_moves = 100
fm_max_passes = 10
fm_large_net = 1000  # neighbors across larger nets are not eagerly re-rated


# Oracle size bounds

oracle_max_vertices = 20
oracle_max_assignments = 20000000
oracle_max_network_nodes = 16


# Desk corpus

corpus_seed = 0
corpus_size = 30
corpus_min_vertices = 100
corpus_max_vertices = 160


# Harness

bench_reps = 10
effectiveness_budget_factor = 3
csv_schema_version = 2
default_corridor_size = 25000
