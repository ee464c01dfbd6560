'''
Converters to hypergraphs: graphs (one two-pin net per edge), METIS graph files and
coordinate-format sparse matrices (row-net model)
'''

import logging

from hypergraph.hypergraph import Hypergraph
from utils.errors import InputError


logger = logging.getLogger(__name__)


def graph_to_hypergraph(edges, num_vertices, edge_weights=None, vertex_weights=None, merge_parallel=False):
    '''
    One two-pin net per edge (u, v) with 0-based endpoints

    Parallel edges stay parallel nets unless merge_parallel, which sums their weights.
    '''
    if edge_weights is None:
        edge_weights = [1] * len(edges)
    if len(edge_weights) != len(edges):
        raise GraphInputError('Expected {} edge weights, got {}'.format(len(edges), len(edge_weights)))
    pins_of_net = []
    net_weights = []
    net_of_edge = {}
    for (u, v), weight in zip(edges, edge_weights):
        if u == v:
            raise SelfLoopError('Self-loop at vertex {}'.format(u))
        if u < 0 or v < 0 or u >= num_vertices or v >= num_vertices:
            raise GraphInputError('Edge ({}, {}) out of range'.format(u, v))
        key = (min(u, v), max(u, v))
        if merge_parallel and key in net_of_edge:
            net_weights[net_of_edge[key]] += weight
            continue
        net_of_edge[key] = len(pins_of_net)
        pins_of_net.append((u, v))
        net_weights.append(weight)
    return Hypergraph(num_vertices, pins_of_net, net_weights, vertex_weights)


def parse_metis_graph(stream):
    '''
    Parse a METIS graph: header "n m [fmt]", then one adjacency line per vertex (1-based)

    fmt: 0 none, 1 edge weights, 10 vertex weights, 11 both.
    Returns (num_vertices, edges, edge_weights, vertex_weights); each undirected edge once.
    '''
    if isinstance(stream, str):
        stream = stream.splitlines()
    lines = [
        (idx + 1, line.strip())
        for idx, line in enumerate(stream)
        if not line.strip().startswith('%')
    ]
    while lines and not lines[0][1]:
        lines.pop(0)
    if not lines:
        raise GraphInputError('No header line')
    line_number, header = lines.pop(0)
    tokens = header.split()
    try:
        num_vertices, num_edges = int(tokens[0]), int(tokens[1])
    except (ValueError, IndexError):
        raise GraphInputError('Line {}: invalid header "{}"'.format(line_number, header))
    fmt = tokens[2].lstrip('0') if len(tokens) > 2 else ''
    if fmt not in ('', '1', '10', '11'):
        raise GraphInputError('Line {}: unsupported fmt "{}"'.format(line_number, tokens[2]))
    edge_weighted = fmt in ('1', '11')
    vertex_weighted = fmt in ('10', '11')
    if len(lines) < num_vertices:
        raise GraphInputError('Expected {} vertex lines, got {}'.format(num_vertices, len(lines)))
    edges = []
    edge_weights = []
    vertex_weights = [] if vertex_weighted else None
    for vertex, (line_number, line) in enumerate(lines[:num_vertices]):
        try:
            numbers = [int(token) for token in line.split()]
        except ValueError:
            raise GraphInputError('Line {}: non-numeric token'.format(line_number))
        if vertex_weighted:
            if not numbers:
                raise GraphInputError('Line {}: missing vertex weight'.format(line_number))
            vertex_weights.append(numbers.pop(0))
        step = 2 if edge_weighted else 1
        if len(numbers) % step:
            raise GraphInputError('Line {}: dangling edge weight'.format(line_number))
        for idx in range(0, len(numbers), step):
            neighbor = numbers[idx] - 1
            if neighbor < 0 or neighbor >= num_vertices:
                raise GraphInputError('Line {}: neighbor {} out of range'.format(line_number, numbers[idx]))
            if neighbor == vertex:
                raise SelfLoopError('Line {}: self-loop'.format(line_number))
            if vertex < neighbor:
                edges.append((vertex, neighbor))
                edge_weights.append(numbers[idx + 1] if edge_weighted else 1)
    if any(line for _, line in lines[num_vertices:]):
        raise GraphInputError('Unexpected lines after {} vertex lines'.format(num_vertices))
    if len(edges) != num_edges:
        logger.warning('Header announces %d edges, found %d.', num_edges, len(edges))
    return num_vertices, edges, edge_weights, vertex_weights


def parse_coordinate_matrix(stream):
    '''
    Parse "rows cols nnz" then "row col [value]" lines (1-based); values are ignored
    '''
    if isinstance(stream, str):
        stream = stream.splitlines()
    header = None
    entries = []
    for idx, line in enumerate(stream):
        stripped = line.strip()
        if not stripped or stripped.startswith('%'):
            continue
        tokens = stripped.split()
        if header is None:
            try:
                header = tuple(int(token) for token in tokens[:3])
            except ValueError:
                raise MatrixInputError('Line {}: invalid header "{}"'.format(idx + 1, stripped))
            if len(header) != 3:
                raise MatrixInputError('Line {}: expected "rows cols nnz"'.format(idx + 1))
            continue
        try:
            row, col = int(tokens[0]), int(tokens[1])
        except (ValueError, IndexError):
            raise MatrixInputError('Line {}: invalid entry "{}"'.format(idx + 1, stripped))
        if row < 1 or row > header[0] or col < 1 or col > header[1]:
            raise MatrixInputError('Line {}: entry ({}, {}) out of range'.format(idx + 1, row, col))
        entries.append((row - 1, col - 1))
    if header is None:
        raise MatrixInputError('No header line')
    if len(entries) != header[2]:
        raise MatrixInputError('Expected {} entries, got {}'.format(header[2], len(entries)))
    return header[0], header[1], entries


def matrix_to_hypergraph(num_rows, num_cols, entries):
    '''
    Row-net model: columns are vertices, each non-empty row is a net over its columns
    '''
    columns_of_row = [[] for _ in range(num_rows)]
    seen = set()
    for row, col in entries:
        if (row, col) in seen:
            continue
        seen.add((row, col))
        columns_of_row[row].append(col)
    pins_of_net = [sorted(columns) for columns in columns_of_row if columns]
    skipped = num_rows - len(pins_of_net)
    if skipped:
        logger.warning('%d empty rows skipped.', skipped)
    return Hypergraph(num_cols, pins_of_net)


# pylint: disable=missing-docstring

class ConverterError(InputError):
    pass


class GraphInputError(ConverterError):
    pass


class SelfLoopError(GraphInputError):
    pass


class MatrixInputError(ConverterError):
    pass
