"""
Core graph value types: edge-colored multigraphs, simple uncolored graphs and digraphs.

All types are immutable after construction. Vertices are whitespace-free string tokens and keep
the order in which they were declared; every algorithm that iterates vertices or edges uses that
order, so results are reproducible.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import *

import networkx as nx

Vertex = str
Color = int
Edge = Tuple[Vertex, Vertex]


class GraphError(Exception):
    """Base class for all graph-related exceptions."""

class InvalidGraphError(GraphError, ValueError):
    """Exception raised when a graph would violate one of its invariants."""

class UnknownVertexError(GraphError, KeyError):
    """Exception raised when a vertex is not part of the graph."""
    def __init__(self, vertex: Vertex) -> None:
        super().__init__(f"Unknown vertex: {vertex}")
        self.vertex = vertex

    def __str__(self) -> str:
        return self.args[0]

class ContractViolationError(GraphError, ValueError):
    """Exception raised when an operation is called with input that violates its precondition."""


@dataclass(frozen=True, eq=False)
class ColoredEdge:
    """
    An undirected colored edge. Two edges are equal if they join the same vertex pair with the same
    color, regardless of the orientation in which they were written.
    """
    u: Vertex
    v: Vertex
    color: Color

    @property
    def key(self) -> Tuple[Vertex, Vertex, Color]:
        first, second = sorted((self.u, self.v))
        return first, second, self.color

    def other(self, vertex: Vertex) -> Vertex:
        """ Return the endpoint opposite to `vertex`. """
        if vertex == self.u:
            return self.v
        if vertex == self.v:
            return self.u
        raise UnknownVertexError(vertex)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ColoredEdge) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"{self.u}-{self.v}:{self.color}"


def _check_vertices(vertices: Tuple[Vertex, ...]) -> None:
    if len(set(vertices)) != len(vertices):
        raise InvalidGraphError("Duplicate vertex")
    for vertex in vertices:
        if not isinstance(vertex, str) or not vertex or any(ch.isspace() for ch in vertex):
            raise InvalidGraphError(f"Invalid vertex name: {vertex!r}")


@dataclass(frozen=True)
class EdgeColoredMultigraph:
    """
    An edge-colored multigraph: parallel edges are allowed if their colors differ, loops are not.
    """
    vertices: Tuple[Vertex, ...] = ()
    edges: Tuple[ColoredEdge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'vertices', tuple(self.vertices))
        object.__setattr__(self, 'edges', tuple(self.edges))
        _check_vertices(self.vertices)

        known = set(self.vertices)
        seen = set()
        for edge in self.edges:
            if edge.u == edge.v:
                raise InvalidGraphError(f"Loop edge at vertex {edge.u}")
            if edge.u not in known or edge.v not in known:
                raise InvalidGraphError(f"Edge {edge!r} has an endpoint outside the vertex set")
            if not isinstance(edge.color, int) or isinstance(edge.color, bool) or edge.color < 1:
                raise InvalidGraphError(f"Edge {edge!r} has a non-positive color")
            if edge in seen:
                raise InvalidGraphError(f"Duplicate parallel edge of the same color: {edge!r}")
            seen.add(edge)

    @classmethod
    def from_edges(cls, edges: Iterable[Tuple[Vertex, Vertex, Color]],
                   isolated: Iterable[Vertex] = ()) -> 'EdgeColoredMultigraph':
        """ Build a graph from (u, v, color) triples, vertices in first-appearance order. """
        colored = [ColoredEdge(u, v, color) for u, v, color in edges]
        vertices = dict.fromkeys(isolated)
        for edge in colored:
            vertices.setdefault(edge.u)
            vertices.setdefault(edge.v)
        return cls(tuple(vertices), tuple(colored))

    @cached_property
    def _incidence(self) -> Dict[Vertex, List[ColoredEdge]]:
        incidence = {vertex: [] for vertex in self.vertices}
        for edge in self.edges:
            incidence[edge.u].append(edge)
            incidence[edge.v].append(edge)
        return incidence

    @cached_property
    def _positions(self) -> Dict[Vertex, int]:
        return {vertex: index for index, vertex in enumerate(self.vertices)}

    def __contains__(self, vertex: Vertex) -> bool:
        return vertex in self._positions

    def __len__(self) -> int:
        return len(self.vertices)

    def is_empty(self) -> bool:
        return not self.vertices

    def position(self, vertex: Vertex) -> int:
        try:
            return self._positions[vertex]
        except KeyError:
            raise UnknownVertexError(vertex) from None

    def incident_edges(self, vertex: Vertex) -> List[ColoredEdge]:
        """ Return the edges incident to `vertex` in edge order. """
        try:
            return list(self._incidence[vertex])
        except KeyError:
            raise UnknownVertexError(vertex) from None

    def color_set(self, vertex: Vertex) -> FrozenSet[Color]:
        """
        Return χ(v), the set of colors of the edges incident to `vertex` (empty for isolated vertices).

        Raises:
            UnknownVertexError: If `vertex` is not part of the graph.
        """
        return frozenset(edge.color for edge in self.incident_edges(vertex))

    @cached_property
    def max_color_count(self) -> int:
        """ The constant c = max |χ(x)| over all vertices (0 for an edgeless graph). """
        return max((len(self.color_set(vertex)) for vertex in self.vertices), default=0)

    @cached_property
    def colors(self) -> FrozenSet[Color]:
        return frozenset(edge.color for edge in self.edges)

    def induced_subgraph(self, vertices: Iterable[Vertex]) -> 'EdgeColoredMultigraph':
        """ Return the subgraph induced by `vertices`, keeping vertex and edge order. """
        keep = set(vertices)
        unknown = keep - set(self.vertices)
        if unknown:
            raise UnknownVertexError(sorted(unknown)[0])
        return EdgeColoredMultigraph(
            tuple(vertex for vertex in self.vertices if vertex in keep),
            tuple(edge for edge in self.edges if edge.u in keep and edge.v in keep))

    def edge_subgraph(self, edges: Iterable[ColoredEdge]) -> 'EdgeColoredMultigraph':
        """ Return the spanning subgraph with the given edges (in this graph's edge order). """
        keep = set(edges)
        return EdgeColoredMultigraph(self.vertices, tuple(edge for edge in self.edges if edge in keep))

    def without_edge(self, edge: ColoredEdge) -> 'EdgeColoredMultigraph':
        return EdgeColoredMultigraph(self.vertices, tuple(e for e in self.edges if e != edge))

    def to_networkx(self) -> nx.MultiGraph:
        """ Return a networkx multigraph with a `color` attribute per edge. """
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            graph.add_edge(edge.u, edge.v, color=edge.color)
        return graph

    def connected_components(self) -> List['EdgeColoredMultigraph']:
        """ Return the connected components as induced subgraphs, ordered by their first vertex. """
        components = nx.connected_components(self.to_networkx())
        ordered = sorted(components, key=lambda component: min(self.position(v) for v in component))
        return [self.induced_subgraph(component) for component in ordered]


@dataclass(frozen=True)
class UncoloredGraph:
    """
    A simple undirected graph. Edges are stored normalized: the endpoint that comes first in
    vertex order is written first.
    """
    vertices: Tuple[Vertex, ...] = ()
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'vertices', tuple(self.vertices))
        _check_vertices(self.vertices)

        positions = {vertex: index for index, vertex in enumerate(self.vertices)}
        normalized = []
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidGraphError(f"Loop edge at vertex {u}")
            if u not in positions or v not in positions:
                raise InvalidGraphError(f"Edge {u}-{v} has an endpoint outside the vertex set")
            edge = (u, v) if positions[u] < positions[v] else (v, u)
            if edge in seen:
                raise InvalidGraphError(f"Parallel edge {u}-{v} in a simple graph")
            seen.add(edge)
            normalized.append(edge)
        object.__setattr__(self, 'edges', tuple(normalized))
        object.__setattr__(self, '_positions', positions)

    def __len__(self) -> int:
        return len(self.vertices)

    def position(self, vertex: Vertex) -> int:
        try:
            return self._positions[vertex]
        except KeyError:
            raise UnknownVertexError(vertex) from None

    def edge_key(self, u: Vertex, v: Vertex) -> Edge:
        """ Return the normalized form of the edge {u, v} (which need not exist). """
        return (u, v) if self.position(u) < self.position(v) else (v, u)

    @cached_property
    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self.edges)

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return self.edge_key(u, v) in self.edge_set

    @cached_property
    def adjacency(self) -> Dict[Vertex, List[Vertex]]:
        """ Neighbour lists in edge order. """
        adjacency = {vertex: [] for vertex in self.vertices}
        for u, v in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        return adjacency

    def normalize_edges(self, edges: Iterable[Edge]) -> FrozenSet[Edge]:
        """
        Normalize an edge set given in any orientation.

        Raises:
            ContractViolationError: If one of the edges is not an edge of this graph.
        """
        result = set()
        for u, v in edges:
            key = self.edge_key(u, v)
            if key not in self.edge_set:
                raise ContractViolationError(f"{u}-{v} is not an edge of the graph")
            result.add(key)
        return frozenset(result)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph


@dataclass(frozen=True)
class Digraph:
    """ A directed graph without loops or parallel arcs. """
    vertices: Tuple[Vertex, ...] = ()
    arcs: Tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'vertices', tuple(self.vertices))
        object.__setattr__(self, 'arcs', tuple(self.arcs))
        _check_vertices(self.vertices)

        known = set(self.vertices)
        if len(set(self.arcs)) != len(self.arcs):
            raise InvalidGraphError("Duplicate arc")
        for u, v in self.arcs:
            if u == v:
                raise InvalidGraphError(f"Loop arc at vertex {u}")
            if u not in known or v not in known:
                raise InvalidGraphError(f"Arc {u}->{v} has an endpoint outside the vertex set")

    @classmethod
    def from_arcs(cls, arcs: Iterable[Edge], isolated: Iterable[Vertex] = ()) -> 'Digraph':
        arcs = list(arcs)
        vertices = dict.fromkeys(isolated)
        for u, v in arcs:
            vertices.setdefault(u)
            vertices.setdefault(v)
        return cls(tuple(vertices), tuple(arcs))

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.arcs)
        return graph
