'''
hMetis hypergraph format

- '%' lines are comments
- header: "m n [fmt]" with fmt in {0, 1, 10, 11}
- m net lines: [weight if fmt has net weights] then 1-based pin ids
- n vertex weight lines if fmt has vertex weights
'''

from collections import namedtuple
from enum import Enum
import logging

from hypergraph.hypergraph import Hypergraph
from utils.errors import InputError


logger = logging.getLogger(__name__)


class HgrFormat(Enum):
    '''
    Weight flag of the header
    '''
    NONE = '0'
    NET_WEIGHTS = '1'
    VERTEX_WEIGHTS = '10'
    BOTH = '11'

    @property
    def has_net_weights(self):
        return self in (HgrFormat.NET_WEIGHTS, HgrFormat.BOTH)

    @property
    def has_vertex_weights(self):
        return self in (HgrFormat.VERTEX_WEIGHTS, HgrFormat.BOTH)


HgrHeader = namedtuple('HgrHeader', [
    'num_nets',
    'num_vertices',
    'fmt',  # HgrFormat
])


def parse_hgr(stream):
    '''
    Parse hMetis text (an iterable of lines, e.g. an open file) into a Hypergraph
    '''
    lines = _meaningful_lines(stream)
    try:
        line_number, header_line = next(lines)
    except StopIteration:
        raise MissingHeaderError('No header line')
    header = _parse_header(header_line, line_number)
    pins_of_net = []
    net_weights = []
    for _ in range(header.num_nets):
        try:
            line_number, line = next(lines)
        except StopIteration:
            raise LineCountError('Expected {} net lines, got {}'.format(header.num_nets, len(pins_of_net)))
        numbers = _parse_numbers(line, line_number)
        weight = 1
        if header.fmt.has_net_weights:
            weight = numbers.pop(0)
            if weight <= 0:
                raise InvalidWeightError('Line {}: net weight must be positive, got {}'.format(line_number, weight))
        if not numbers:
            raise EmptyNetError('Line {}: net {} has no pins'.format(line_number, len(pins_of_net) + 1))
        pins = []
        seen = set()
        for pin in numbers:
            if pin < 1 or pin > header.num_vertices:
                raise PinOutOfRangeError('Line {}: pin {} out of range [1,{}]'.format(line_number, pin, header.num_vertices))
            if pin in seen:
                logger.warning('Line %d: duplicate pin %d removed.', line_number, pin)
                continue
            seen.add(pin)
            pins.append(pin - 1)
        pins_of_net.append(pins)
        net_weights.append(weight)
    vertex_weights = None
    if header.fmt.has_vertex_weights:
        vertex_weights = []
        for _ in range(header.num_vertices):
            try:
                line_number, line = next(lines)
            except StopIteration:
                raise LineCountError('Expected {} vertex weight lines, got {}'.format(header.num_vertices, len(vertex_weights)))
            numbers = _parse_numbers(line, line_number)
            if len(numbers) != 1:
                raise InvalidWeightError('Line {}: expected one vertex weight'.format(line_number))
            if numbers[0] <= 0:
                raise InvalidWeightError('Line {}: vertex weight must be positive, got {}'.format(line_number, numbers[0]))
            vertex_weights.append(numbers[0])
    for line_number, _ in lines:
        raise LineCountError('Line {}: unexpected line after body'.format(line_number))
    hypergraph = Hypergraph(header.num_vertices, pins_of_net, net_weights, vertex_weights)
    logger.debug('Parsed %s.', hypergraph)
    return hypergraph


def write_hgr(hypergraph):
    '''
    Render a Hypergraph as hMetis text
    '''
    fmt = hgr_format_of(hypergraph)
    header = [str(hypergraph.num_nets), str(hypergraph.num_vertices)]
    if fmt != HgrFormat.NONE:
        header.append(fmt.value)
    lines = [' '.join(header)]
    for net, pins in enumerate(hypergraph.pins_of_net):
        tokens = [str(pin + 1) for pin in pins]
        if fmt.has_net_weights:
            tokens.insert(0, str(hypergraph.net_weights[net]))
        lines.append(' '.join(tokens))
    if fmt.has_vertex_weights:
        lines.extend(str(weight) for weight in hypergraph.vertex_weights)
    return '\n'.join(lines) + '\n'


def hgr_format_of(hypergraph):
    '''
    Smallest format flag able to represent the hypergraph's weights
    '''
    net_weighted = any(weight != 1 for weight in hypergraph.net_weights)
    vertex_weighted = any(weight != 1 for weight in hypergraph.vertex_weights)
    if net_weighted and vertex_weighted:
        return HgrFormat.BOTH
    if net_weighted:
        return HgrFormat.NET_WEIGHTS
    if vertex_weighted:
        return HgrFormat.VERTEX_WEIGHTS
    return HgrFormat.NONE


def load_hgr(filename):
    '''
    Load hypergraph from .hgr file
    '''
    logger.info('Loading %s...', filename)
    try:
        with open(filename, 'rt') as input_file:
            hypergraph = parse_hgr(input_file)
    except OSError as ex:
        raise HgrFileError('Could not read {}: {}'.format(filename, ex.strerror))
    logger.info('Loaded %s.', hypergraph)
    return hypergraph


def save_hgr(hypergraph, filename):
    '''
    Save hypergraph to .hgr file
    '''
    with open(filename, 'wt') as output_file:
        output_file.write(write_hgr(hypergraph))


def _meaningful_lines(stream):
    if isinstance(stream, str):
        stream = stream.splitlines()
    for idx, line in enumerate(stream):
        stripped = line.strip()
        if not stripped or stripped.startswith('%'):
            continue
        yield idx + 1, stripped


def _parse_numbers(line, line_number):
    try:
        return [int(token) for token in line.split()]
    except ValueError:
        raise NonNumericTokenError('Line {}: non-numeric token in "{}"'.format(line_number, line))


def _parse_header(line, line_number):
    tokens = line.split()
    if len(tokens) not in (2, 3):
        raise InvalidHeaderError('Line {}: expected "m n [fmt]", got "{}"'.format(line_number, line))
    numbers = _parse_numbers(' '.join(tokens[:2]), line_number)
    num_nets, num_vertices = numbers
    if num_nets < 0 or num_vertices < 0:
        raise InvalidHeaderError('Line {}: negative count'.format(line_number))
    fmt = HgrFormat.NONE
    if len(tokens) == 3:
        try:
            fmt = HgrFormat(tokens[2].lstrip('0') or '0')
        except ValueError:
            raise InvalidHeaderError('Line {}: unknown fmt "{}"'.format(line_number, tokens[2]))
    return HgrHeader(num_nets, num_vertices, fmt)


# pylint: disable=missing-docstring

class HgrParseError(InputError):
    pass


class HgrFileError(HgrParseError):
    pass


class MissingHeaderError(HgrParseError):
    pass


class InvalidHeaderError(HgrParseError):
    pass


class LineCountError(HgrParseError):
    pass


class NonNumericTokenError(HgrParseError):
    pass


class PinOutOfRangeError(HgrParseError):
    pass


class EmptyNetError(HgrParseError):
    pass


class InvalidWeightError(HgrParseError):
    pass
