'''
Seeded desk corpus for the bench and the acceptance tests

Three families, all with a locality structure so that partitions have something to find:
- circuit: nets of 2..8 pins drawn from a window around a random vertex of a ring
- grid: two-pin nets of a weighted grid graph
- matrix: row-net model of a banded sparse matrix

Instance i is generated from derive_seed(seed, 'corpus', i) only, so a corpus prefix does not
depend on the corpus size.
'''

from collections import namedtuple
import logging
import os
import random

from hgrio.converters import graph_to_hypergraph, matrix_to_hypergraph
from hgrio.hgr import save_hgr
from hypergraph.hypergraph import Hypergraph
from utils import config
from utils.errors import ConfigError
from utils.utils import derive_seed


logger = logging.getLogger(__name__)


CorpusInstance = namedtuple('CorpusInstance', ['name', 'family', 'hypergraph'])

NET_SIZES = (2, 2, 2, 2, 2, 3, 3, 3, 4, 4, 5, 6, 8)


def circuit_hypergraph(rng, num_vertices):
    window = max(8, num_vertices // 10)
    num_nets = int(num_vertices * rng.uniform(1.0, 1.5))
    pins_of_net = []
    for _ in range(num_nets):
        size = rng.choice(NET_SIZES)
        center = rng.randrange(num_vertices)
        neighborhood = [(center + offset) % num_vertices for offset in range(-window, window + 1)]
        pins_of_net.append(rng.sample(neighborhood, size))
    covered = set(pin for pins in pins_of_net for pin in pins)
    for vertex in range(num_vertices):
        if vertex not in covered:
            pins_of_net.append([vertex, (vertex + 1) % num_vertices])
    net_weights = [rng.randint(1, 3) for _ in pins_of_net]
    if rng.random() < 0.3:
        vertex_weights = [rng.randint(1, 3) for _ in range(num_vertices)]
    else:
        vertex_weights = None
    return Hypergraph(num_vertices, pins_of_net, net_weights, vertex_weights)


def grid_hypergraph(rng, num_vertices):
    cols = max(2, int(round(num_vertices ** 0.5)))
    rows = max(2, num_vertices // cols)
    edges = []
    for row in range(rows):
        for col in range(cols):
            vertex = row * cols + col
            if col + 1 < cols:
                edges.append((vertex, vertex + 1))
            if row + 1 < rows:
                edges.append((vertex, vertex + cols))
    edge_weights = [rng.randint(1, 4) for _ in edges]
    return graph_to_hypergraph(edges, rows * cols, edge_weights)


def banded_matrix_hypergraph(rng, num_vertices):
    band = max(4, num_vertices // 12)
    entries = []
    for row in range(num_vertices):
        entries.append((row, row))
        for _ in range(rng.randint(1, 4)):
            col = min(num_vertices - 1, max(0, row + rng.randint(-band, band)))
            if col == row:
                col = (row + 1) % num_vertices
            entries.append((row, col))
    return matrix_to_hypergraph(num_vertices, num_vertices, entries)


FAMILIES = (
    ('circuit', circuit_hypergraph),
    ('circuit', circuit_hypergraph),
    ('matrix', banded_matrix_hypergraph),
    ('circuit', circuit_hypergraph),
    ('grid', grid_hypergraph),
)


def desk_corpus(seed=config.corpus_seed, count=config.corpus_size,
                min_vertices=config.corpus_min_vertices, max_vertices=config.corpus_max_vertices):
    '''
    Return count CorpusInstances; every fifth instance is graph-derived
    '''
    if count < 0:
        raise ConfigError('Corpus size must be non-negative, got {}'.format(count))
    if min_vertices < 4 or max_vertices < min_vertices:
        raise ConfigError('Invalid corpus vertex range [{}, {}]'.format(min_vertices, max_vertices))
    corpus = []
    for idx in range(count):
        rng = random.Random(derive_seed(seed, 'corpus', idx))
        family, generate = FAMILIES[idx % len(FAMILIES)]
        num_vertices = rng.randint(min_vertices, max_vertices)
        hypergraph = generate(rng, num_vertices)
        corpus.append(CorpusInstance('desk-{:02d}-{}'.format(idx, family), family, hypergraph))
    logger.debug('Desk corpus: %d instances, seed %d.', count, seed)
    return corpus


def write_corpus(corpus, directory, ks, epsilons):
    '''
    Save every instance as <name>.hgr under directory and a manifest.txt with one
    "path,k,eps" line per instance and (k, eps); returns the manifest path
    '''
    os.makedirs(directory, exist_ok=True)
    manifest = os.path.join(directory, 'manifest.txt')
    with open(manifest, 'wt') as manifest_file:
        for instance in corpus:
            path = os.path.join(directory, instance.name + '.hgr')
            save_hgr(instance.hypergraph, path)
            for k in ks:
                for epsilon in epsilons:
                    manifest_file.write('{},{},{}\n'.format(path, k, epsilon))
    logger.info('%d instances written to %s.', len(corpus), directory)
    return manifest
