'''
Brute-force oracles for small instances
'''

from .oracle import brute_min_st_cut, brute_best_partition, enumerate_network_min_cuts, counting_oracle
