import logging
from collections import Counter, deque
from typing import *

import numpy as np

from PyPcCycles.mylib.graph.graph_types import EdgeColoredMultigraph, Vertex

logger = logging.getLogger(__name__)


def reduce_monochromatic_with_trace(graph: EdgeColoredMultigraph,
                                    rng: Optional[np.random.Generator] = None) -> Tuple[EdgeColoredMultigraph, List[Vertex]]:
    """
    Recursively delete vertices that see at most one color (|χ(v)| <= 1, which includes isolated
    vertices) until none is left.

    The result does not depend on the deletion order: deleting vertices only shrinks the color sets
    of the remaining ones, so a vertex that becomes deletable stays deletable.

    Args:
        graph: The edge-colored multigraph G.
        rng: If given, pending vertices are deleted in random order (used to exercise order independence).

    Returns:
        The reduced graph G' (an induced subgraph of G) and the vertices in deletion order.
    """
    # color multiplicities of the edges incident to each remaining vertex
    color_counts: Dict[Vertex, Counter] = {
        vertex: Counter(edge.color for edge in graph.incident_edges(vertex)) for vertex in graph.vertices}

    pending = deque(vertex for vertex in graph.vertices if len(color_counts[vertex]) <= 1)
    queued = set(pending)
    deleted: List[Vertex] = []
    removed: Set[Vertex] = set()

    while pending:
        if rng is not None:
            index = int(rng.integers(len(pending)))
            pending[index], pending[-1] = pending[-1], pending[index]
            vertex = pending.pop()
        else:
            vertex = pending.popleft()

        removed.add(vertex)
        deleted.append(vertex)

        for edge in graph.incident_edges(vertex):
            neighbour = edge.other(vertex)
            if neighbour in removed:
                continue
            counts = color_counts[neighbour]
            counts[edge.color] -= 1
            if counts[edge.color] == 0:
                del counts[edge.color]
            if len(counts) <= 1 and neighbour not in queued:
                queued.add(neighbour)
                pending.append(neighbour)

    reduced = graph.induced_subgraph(vertex for vertex in graph.vertices if vertex not in removed)
    logger.debug(f"Monochromatic reduction deleted {len(deleted)} of {len(graph)} vertices")
    return reduced, deleted


def reduce_monochromatic(graph: EdgeColoredMultigraph) -> EdgeColoredMultigraph:
    """ Return G', the fixed point of deleting monochromatic (and isolated) vertices. """
    return reduce_monochromatic_with_trace(graph)[0]


def color_set(graph: EdgeColoredMultigraph, vertex: Vertex) -> FrozenSet[int]:
    """ Return χ(v) for a vertex of `graph`; raises UnknownVertexError for foreign vertices. """
    return graph.color_set(vertex)
