'''
Boundary k-way FM

A pass moves unlocked boundary vertices in order of decreasing gain to their best block
that still fits, negative gains included, then rolls back to the best prefix. Passes repeat
until one brings no improvement.
'''

import heapq
import logging

from utils import config


logger = logging.getLogger(__name__)


def _quality(partition):
    '''
    (overload, km1), smaller is better
    '''
    return max(0, partition.max_block_weight() - partition.l_max), partition.km1


def best_move(partition, vertex):
    '''
    (gain, target) of the best feasible move of vertex, None if it cannot move
    '''
    hypergraph = partition.hypergraph
    source = partition.block(vertex)
    if partition.block_sizes[source] <= 1:
        return None
    weight = hypergraph.vertex_weights[vertex]
    targets = set()
    for net in hypergraph.nets_of_vertex[vertex]:
        targets.update(partition.touched_blocks(net))
    targets.discard(source)
    best = None
    for target in sorted(targets):
        if not partition.fits(target, weight):
            continue
        gain = partition.move_gain(vertex, target)
        key = (gain, -partition.block_weights[target])
        if best is None or key > best[0]:
            best = (key, target)
    if best is None:
        return None
    return best[0][0], best[1]


def gain_affected(partition, net, from_block, to_block):
    '''
    True if the last move of a pin of net from_block -> to_block changed the km1 gains
    of the other pins of net
    '''
    return partition.pin_count(net, from_block) in (0, 1) or partition.pin_count(net, to_block) in (1, 2)


def _is_boundary(partition, vertex):
    return any(partition.is_cut(net) for net in partition.hypergraph.nets_of_vertex[vertex])


def fm_round(partition, rng, max_fruitless=config.fm_max_fruitless_moves, large_net=config.fm_large_net):
    '''
    One FM pass in place; returns the improvement of km1
    '''
    hypergraph = partition.hypergraph
    start_km1 = partition.km1
    heap = []

    def push(vertex):
        move = best_move(partition, vertex)
        if move is not None:
            heapq.heappush(heap, (-move[0], rng.random(), vertex, move[1]))

    for vertex in range(hypergraph.num_vertices):
        if _is_boundary(partition, vertex):
            push(vertex)
    locked = set()
    moves = []
    best_quality = _quality(partition)
    best_prefix = 0
    fruitless = 0
    while heap and fruitless < max_fruitless:
        neg_gain, _, vertex, target = heapq.heappop(heap)
        if vertex in locked:
            continue
        move = best_move(partition, vertex)
        if move is None:
            continue
        if move != (-neg_gain, target):
            heapq.heappush(heap, (-move[0], rng.random(), vertex, move[1]))
            continue
        source = partition.block(vertex)
        partition.move(vertex, target)
        locked.add(vertex)
        moves.append((vertex, source))
        quality = _quality(partition)
        if quality < best_quality:
            best_quality = quality
            best_prefix = len(moves)
            fruitless = 0
        else:
            fruitless += 1
        for net in hypergraph.nets_of_vertex[vertex]:
            if len(hypergraph.pins_of_net[net]) > large_net:
                continue
            if not gain_affected(partition, net, source, target):
                continue
            for pin in hypergraph.pins_of_net[net]:
                if pin not in locked:
                    push(pin)
    for vertex, source in reversed(moves[best_prefix:]):
        partition.move(vertex, source)
    logger.debug('FM pass: %d moves, %d kept, km1 %d -> %d.', len(moves), best_prefix, start_km1, partition.km1)
    return start_km1 - partition.km1


def fm_pass(partition, rng, max_passes=config.fm_max_passes, max_fruitless=config.fm_max_fruitless_moves):
    '''
    Repeat FM passes until one does not improve; returns the total km1 improvement
    '''
    start_km1 = partition.km1
    for _ in range(max_passes):
        before = _quality(partition)
        fm_round(partition, rng, max_fruitless)
        if _quality(partition) >= before:
            break
    logger.debug('FM: km1 %d -> %d.', start_km1, partition.km1)
    return start_km1 - partition.km1
