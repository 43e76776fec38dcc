"""
Line-based text formats for graphs.

Edge-colored multigraph:   `<u> <v> <color>`       one edge of a positive integer color
Uncolored graph:           `<u> <v> [e2]`          one edge, optionally annotated as an E2 edge
Digraph:                   `arc <u> <v>`           one arc
All formats:               `vertex <name>`         an (isolated) vertex, `#` starts a comment
"""
import re
from typing import *

from PyPcCycles.mylib.graph.graph_types import *

VERTEX_KEYWORD = 'vertex'
ARC_KEYWORD = 'arc'
E2_ANNOTATION = 'e2'

_POSITIVE_INTEGER = re.compile(r'[0-9]+')


class GraphParseError(GraphError, ValueError):
    """Exception raised when a graph file does not conform to its text format."""
    def __init__(self, line_number: int, message: str) -> None:
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


def _decode(text: Union[str, bytes]) -> str:
    if isinstance(text, bytes):
        try:
            return text.decode('utf-8')
        except UnicodeDecodeError as e:
            raise GraphParseError(1, f"Input is not valid UTF-8 ({e})") from e
    return text


def _tokenized_lines(text: Union[str, bytes]) -> Iterator[Tuple[int, List[str]]]:
    """ Yield (line number, tokens) for every line that is not blank after removing comments. """
    for line_number, line in enumerate(_decode(text).splitlines(), start=1):
        tokens = line.split('#', 1)[0].split()
        if tokens:
            yield line_number, tokens


class _VertexCollector:
    """ Collects vertices in first-appearance order. """

    def __init__(self):
        self.vertices: Dict[Vertex, None] = {}

    def add(self, *vertices: Vertex) -> None:
        for vertex in vertices:
            self.vertices.setdefault(vertex)

    def result(self) -> Tuple[Vertex, ...]:
        return tuple(self.vertices)


def parse_graph(text: Union[str, bytes]) -> EdgeColoredMultigraph:
    """
    Parse an edge-colored multigraph.

    Raises:
        GraphParseError: For malformed lines, non-positive colors, loops and duplicate same-colored
            parallel edges; the message names the line number.
    """
    collector = _VertexCollector()
    edges: List[ColoredEdge] = []
    seen: Dict[ColoredEdge, int] = {}

    for line_number, tokens in _tokenized_lines(text):
        if len(tokens) == 2 and tokens[0] == VERTEX_KEYWORD:
            collector.add(tokens[1])
            continue

        if len(tokens) != 3:
            raise GraphParseError(line_number, f"Expected '<u> <v> <color>' or 'vertex <name>', got {' '.join(tokens)!r}")

        u, v, color_token = tokens
        if not _POSITIVE_INTEGER.fullmatch(color_token) or int(color_token) == 0:
            raise GraphParseError(line_number, f"Color must be a positive integer, got {color_token!r}")
        if u == v:
            raise GraphParseError(line_number, f"Loop edge at vertex {u!r}")

        edge = ColoredEdge(u, v, int(color_token))
        if edge in seen:
            raise GraphParseError(line_number, f"Duplicate edge {edge!r} (first declared on line {seen[edge]})")
        seen[edge] = line_number

        collector.add(u, v)
        edges.append(edge)

    return EdgeColoredMultigraph(collector.result(), tuple(edges))


def parse_uncolored_graph(text: Union[str, bytes]) -> Tuple[UncoloredGraph, FrozenSet[Edge]]:
    """
    Parse a simple uncolored graph.

    Returns:
        The graph and the set of edges annotated with `e2` (normalized).

    Raises:
        GraphParseError: For malformed lines, loops and parallel edges.
    """
    collector = _VertexCollector()
    edges: List[Edge] = []
    annotated: List[Edge] = []
    seen: Dict[FrozenSet[Vertex], int] = {}

    for line_number, tokens in _tokenized_lines(text):
        if len(tokens) == 2 and tokens[0] == VERTEX_KEYWORD:
            collector.add(tokens[1])
            continue

        if len(tokens) not in (2, 3) or (len(tokens) == 3 and tokens[2] != E2_ANNOTATION):
            raise GraphParseError(line_number, f"Expected '<u> <v> [e2]' or 'vertex <name>', got {' '.join(tokens)!r}")

        u, v = tokens[:2]
        if u == v:
            raise GraphParseError(line_number, f"Loop edge at vertex {u!r}")
        pair = frozenset((u, v))
        if pair in seen:
            raise GraphParseError(line_number, f"Duplicate edge {u}-{v} (first declared on line {seen[pair]})")
        seen[pair] = line_number

        collector.add(u, v)
        edges.append((u, v))
        if len(tokens) == 3:
            annotated.append((u, v))

    graph = UncoloredGraph(collector.result(), tuple(edges))
    return graph, graph.normalize_edges(annotated)


def parse_digraph(text: Union[str, bytes]) -> Digraph:
    """
    Parse a digraph.

    Raises:
        GraphParseError: For malformed lines, loops and duplicate arcs.
    """
    collector = _VertexCollector()
    arcs: List[Edge] = []
    seen: Dict[Edge, int] = {}

    for line_number, tokens in _tokenized_lines(text):
        if len(tokens) == 2 and tokens[0] == VERTEX_KEYWORD:
            collector.add(tokens[1])
            continue

        if len(tokens) != 3 or tokens[0] != ARC_KEYWORD:
            raise GraphParseError(line_number, f"Expected 'arc <u> <v>' or 'vertex <name>', got {' '.join(tokens)!r}")

        u, v = tokens[1:]
        if u == v:
            raise GraphParseError(line_number, f"Loop arc at vertex {u!r}")
        if (u, v) in seen:
            raise GraphParseError(line_number, f"Duplicate arc {u}->{v} (first declared on line {seen[(u, v)]})")
        seen[(u, v)] = line_number

        collector.add(u, v)
        arcs.append((u, v))

    return Digraph(collector.result(), tuple(arcs))


def parse_edge_list(text: str) -> List[Edge]:
    """
    Parse a whitespace-separated edge list as given on the command line: either tokens of the form
    `u,v`, or plain vertex tokens that are paired up consecutively (`"v1 v2 v3 v4"`).

    Raises:
        GraphParseError: If a token is malformed or the number of plain tokens is odd.
    """
    tokens = text.split()
    if any(',' in token for token in tokens):
        edges = []
        for token in tokens:
            parts = token.split(',')
            if len(parts) != 2 or not all(parts):
                raise GraphParseError(1, f"Expected an edge token 'u,v', got {token!r}")
            edges.append((parts[0], parts[1]))
        return edges

    if len(tokens) % 2:
        raise GraphParseError(1, f"Odd number of vertex tokens in edge list {text!r}")
    return [(tokens[i], tokens[i + 1]) for i in range(0, len(tokens), 2)]


def _isolated_vertex_lines(vertices: Iterable[Vertex], touched: Set[Vertex]) -> List[str]:
    return [f"{VERTEX_KEYWORD} {vertex}" for vertex in vertices if vertex not in touched]


def serialize_graph(graph: EdgeColoredMultigraph) -> str:
    """ Serialize an edge-colored multigraph, reproducing the edges in their original order. """
    touched = {vertex for edge in graph.edges for vertex in (edge.u, edge.v)}
    lines = _isolated_vertex_lines(graph.vertices, touched)
    lines += [f"{edge.u} {edge.v} {edge.color}" for edge in graph.edges]
    return ''.join(line + '\n' for line in lines)


def serialize_uncolored_graph(graph: UncoloredGraph, annotated: Iterable[Edge] = ()) -> str:
    """ Serialize an uncolored graph, marking the edges in `annotated` with a trailing `e2`. """
    annotated = graph.normalize_edges(annotated)
    touched = {vertex for edge in graph.edges for vertex in edge}
    lines = _isolated_vertex_lines(graph.vertices, touched)
    lines += [f"{u} {v} {E2_ANNOTATION}" if (u, v) in annotated else f"{u} {v}" for u, v in graph.edges]
    return ''.join(line + '\n' for line in lines)


def serialize_digraph(digraph: Digraph) -> str:
    touched = {vertex for arc in digraph.arcs for vertex in arc}
    lines = _isolated_vertex_lines(digraph.vertices, touched)
    lines += [f"{ARC_KEYWORD} {u} {v}" for u, v in digraph.arcs]
    return ''.join(line + '\n' for line in lines)
