"""
The gadget graph G* of an edge-colored multigraph G' without monochromatic vertices.

Every vertex x of G' becomes a gadget G_x with a color port x_q and a selector x'_q per color q in
χ(x), plus a hub pair x''_a, x''_b:

    E(G_x) = {x''_a x''_b} ∪ {x'_q x''_a, x'_q x''_b : q ∈ χ(x)} ∪ {x_q x'_q : q ∈ χ(x)}

A perfect matching either matches every port inside its gadget (x is unused) or exactly two
ports leave the gadget, and their selectors take the hubs. Each edge yz of color q becomes the E2
edge y_q z_q, so the E2 edges of a perfect matching form a PC cycle subgraph of G' with the same
number of edges, and vice versa.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import *

from PyPcCycles.mylib.graph.graph_types import *
from PyPcCycles.mylib.graph.matching import Matching

logger = logging.getLogger(__name__)


class GadgetRole(Enum):
    PORT = 'port'
    SELECTOR = 'sel'
    HUB = 'hub'


HUB_A = 'a'
HUB_B = 'b'


@dataclass(frozen=True)
class GadgetVertex:
    """ The role of a G* vertex and the vertex of G' it belongs to. """
    source: Vertex
    role: GadgetRole
    index: Union[int, str]    # color for ports and selectors, HUB_A / HUB_B for hubs

    @property
    def name(self) -> Vertex:
        return f"{self.source}:{self.role.value}:{self.index}"


@dataclass(frozen=True)
class GadgetGraph:
    """
    The uncolored graph G* with its E1/E2 partition.

    Attributes:
        graph: G* itself.
        e1_edges: Gadget-internal edges.
        e2_edges: Port-to-port edges, one per edge of G'.
        back_map: Maps each E2 edge (normalized) to the colored edge of G' it encodes.
        vertex_roles: Maps each G* vertex name to its role.
    """
    graph: UncoloredGraph
    e1_edges: FrozenSet[Edge]
    e2_edges: FrozenSet[Edge]
    back_map: Mapping[Edge, ColoredEdge]
    vertex_roles: Mapping[Vertex, GadgetVertex]

    def is_empty(self) -> bool:
        return not self.graph.vertices

    def gadget_vertices(self, source: Vertex) -> List[Vertex]:
        """ Return the G* vertices of the gadget G_x of `source`. """
        return [name for name, role in self.vertex_roles.items() if role.source == source]

    @property
    def sources(self) -> List[Vertex]:
        return list(dict.fromkeys(role.source for role in self.vertex_roles.values()))


def port(source: Vertex, color: Color) -> Vertex:
    return GadgetVertex(source, GadgetRole.PORT, color).name


def build_gadget_graph(reduced: EdgeColoredMultigraph) -> GadgetGraph:
    """
    Build G* from a graph without monochromatic vertices.

    Gadgets appear in vertex order, and inside a gadget the vertices are ordered hub a, hub b, then
    port and selector per color in increasing color order.

    Raises:
        ContractViolationError: If a vertex of `reduced` sees fewer than two colors.
    """
    roles: Dict[Vertex, GadgetVertex] = {}
    e1_edges: List[Edge] = []

    def add(role: GadgetVertex) -> Vertex:
        roles[role.name] = role
        return role.name

    for x in reduced.vertices:
        colors = sorted(reduced.color_set(x))
        if len(colors) < 2:
            raise ContractViolationError(
                f"Vertex {x} sees {len(colors)} color(s); the gadget graph needs a monochromatic-reduced graph")

        hub_a = add(GadgetVertex(x, GadgetRole.HUB, HUB_A))
        hub_b = add(GadgetVertex(x, GadgetRole.HUB, HUB_B))
        e1_edges.append((hub_a, hub_b))
        for q in colors:
            x_port = add(GadgetVertex(x, GadgetRole.PORT, q))
            x_selector = add(GadgetVertex(x, GadgetRole.SELECTOR, q))
            e1_edges += [(x_port, x_selector), (x_selector, hub_a), (x_selector, hub_b)]

    e2_pairs = [(port(edge.u, edge.color), port(edge.v, edge.color)) for edge in reduced.edges]

    graph = UncoloredGraph(tuple(roles), tuple(e1_edges) + tuple(e2_pairs))
    back_map = {graph.edge_key(*pair): edge for pair, edge in zip(e2_pairs, reduced.edges)}

    logger.debug(f"Gadget graph: {len(graph.vertices)} vertices, {len(e1_edges)} E1 edges, {len(back_map)} E2 edges")

    return GadgetGraph(
        graph=graph,
        e1_edges=graph.normalize_edges(e1_edges),
        e2_edges=frozenset(back_map),
        back_map=back_map,
        vertex_roles=roles)


def gadget_internal_matching(gadget: GadgetGraph) -> Matching:
    """
    Return the perfect matching that uses no E2 edge: in every gadget the hubs are matched with
    each other and every port with its selector.

    Raises:
        ContractViolationError: If the gadget graph is empty.
    """
    if gadget.is_empty():
        raise ContractViolationError("The gadget graph is empty")

    edges = []
    for name, role in gadget.vertex_roles.items():
        if role.role is GadgetRole.HUB and role.index == HUB_A:
            edges.append(gadget.graph.edge_key(name, GadgetVertex(role.source, GadgetRole.HUB, HUB_B).name))
        elif role.role is GadgetRole.PORT:
            edges.append(gadget.graph.edge_key(name, GadgetVertex(role.source, GadgetRole.SELECTOR, role.index).name))
    return Matching(frozenset(edges))


def matching_to_pc_cycle_subgraph(gadget: GadgetGraph, matching: Matching) -> Set[ColoredEdge]:
    """
    Translate a perfect matching of G* into the PC cycle subgraph of G' formed by its E2 edges.

    Raises:
        ContractViolationError: If `matching` is not a perfect matching of G*.
    """
    if not matching.is_perfect(gadget.graph):
        raise ContractViolationError("The matching is not a perfect matching of the gadget graph")

    normalized = matching.normalized(gadget.graph)
    return {gadget.back_map[edge] for edge in normalized.edges if edge in gadget.e2_edges}


def gadget_size_bound(reduced: EdgeColoredMultigraph) -> int:
    """ The bound (2c + 2) * |V(G')| on the number of G* vertices. """
    return (2 * reduced.max_color_count + 2) * len(reduced.vertices)
