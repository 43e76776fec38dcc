"""
Properly colored (PC) cycles and PC cycle subgraphs.

A PC cycle subgraph is a set of edges in which every touched vertex has degree 2 and sees two
different colors; its components are therefore PC cycles. Two parallel edges of different colors
form a PC cycle of length 2.
"""
from collections import defaultdict
from dataclasses import dataclass
from typing import *

from PyPcCycles.mylib.graph.graph_types import *


class InvalidCycleError(GraphError, ValueError):
    """Exception raised when a vertex/edge sequence is not a PC cycle."""


@dataclass(frozen=True)
class PcCycle:
    """
    A PC cycle as a cyclic sequence. `edges[i]` joins `vertices[i]` and `vertices[i + 1]`, the last
    edge closes the cycle back to `vertices[0]`.
    """
    vertices: Tuple[Vertex, ...]
    edges: Tuple[ColoredEdge, ...]

    def __post_init__(self):
        object.__setattr__(self, 'vertices', tuple(self.vertices))
        object.__setattr__(self, 'edges', tuple(self.edges))

        length = len(self.vertices)
        if length < 2 or len(self.edges) != length:
            raise InvalidCycleError(f"A cycle needs as many edges as vertices (at least 2), got {length} vertices "
                                    f"and {len(self.edges)} edges")
        if len(set(self.vertices)) != length:
            raise InvalidCycleError("A cycle must not repeat a vertex")
        if len(set(self.edges)) != length:
            raise InvalidCycleError("A cycle must not repeat an edge")

        for i, edge in enumerate(self.edges):
            ends = {self.vertices[i], self.vertices[(i + 1) % length]}
            if {edge.u, edge.v} != ends:
                raise InvalidCycleError(f"Edge {edge!r} does not join {' and '.join(sorted(ends))}")
            if edge.color == self.edges[i - 1].color:
                raise InvalidCycleError(f"Adjacent edges {self.edges[i - 1]!r} and {edge!r} have the same color")

    @classmethod
    def from_edge_set(cls, edges: Iterable[ColoredEdge]) -> 'PcCycle':
        """
        Arrange an edge set that forms exactly one PC cycle into cyclic order. The cycle starts at
        the smallest vertex name and leaves it through the incident edge with the smaller key.

        Raises:
            InvalidCycleError: If the edges do not form a single PC cycle.
        """
        edges = set(edges)
        incidence = _incidence(edges)
        if not incidence:
            raise InvalidCycleError("The edge set is empty")
        if any(len(incident) != 2 for incident in incidence.values()):
            raise InvalidCycleError("Every vertex of a cycle must have degree 2")

        start = min(incidence)
        vertices = [start]
        ordered = []
        edge = min(incidence[start], key=lambda e: e.key)
        current = start
        while True:
            ordered.append(edge)
            current = edge.other(current)
            if current == start:
                break
            vertices.append(current)
            first, second = incidence[current]
            edge = second if first == edge else first

        if len(ordered) != len(edges):
            raise InvalidCycleError(f"The edge set splits into several cycles ({len(ordered)} of {len(edges)} edges reached)")
        return cls(tuple(vertices), tuple(ordered))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices)

    def is_odd(self) -> bool:
        return self.length % 2 == 1

    @property
    def edge_set(self) -> FrozenSet[ColoredEdge]:
        return frozenset(self.edges)

    def lies_in(self, graph: EdgeColoredMultigraph) -> bool:
        """ Whether every edge of the cycle is an edge of `graph`. """
        return self.edge_set <= set(graph.edges)

    def __str__(self) -> str:
        steps = ' '.join(f"{vertex} -{edge.color}-" for vertex, edge in zip(self.vertices, self.edges))
        return f"{steps} {self.vertices[0]}"


def _incidence(edges: Iterable[ColoredEdge]) -> Dict[Vertex, List[ColoredEdge]]:
    incidence = defaultdict(list)
    for edge in edges:
        incidence[edge.u].append(edge)
        incidence[edge.v].append(edge)
    return incidence


def is_pc_cycle_subgraph(edges: Iterable[ColoredEdge]) -> bool:
    """ Whether every touched vertex has degree 2 with two different colors. The empty set qualifies. """
    for incident in _incidence(set(edges)).values():
        if len(incident) != 2 or incident[0].color == incident[1].color:
            return False
    return True


def pc_cycle_subgraph_components(edges: Iterable[ColoredEdge]) -> List[PcCycle]:
    """
    Split a PC cycle subgraph into its PC cycles, ordered by their smallest vertex name.

    Raises:
        InvalidCycleError: If the edges do not form a PC cycle subgraph.
    """
    edges = set(edges)
    if not is_pc_cycle_subgraph(edges):
        raise InvalidCycleError("The edge set is not a PC cycle subgraph")

    incidence = _incidence(edges)
    seen: Set[Vertex] = set()
    cycles = []
    for start in sorted(incidence):
        if start in seen:
            continue
        component = set()
        stack = [start]
        while stack:
            vertex = stack.pop()
            if vertex in seen:
                continue
            seen.add(vertex)
            for edge in incidence[vertex]:
                component.add(edge)
                stack.append(edge.other(vertex))
        cycles.append(PcCycle.from_edge_set(component))
    return cycles
