from dataclasses import dataclass
from typing import *

import networkx as nx
import numpy as np

from PyPcCycles.mylib.graph.graph_types import ColoredEdge, Digraph, EdgeColoredMultigraph

MAX_CONNECTED_ATTEMPTS = 1000


@dataclass(frozen=True)
class InstanceGenSpec:
    """
    Parameters of a random edge-colored multigraph. Ranges are inclusive.

    Every vertex pair gets an edge with probability `edge_probability`; each further color is
    added in parallel with probability `parallel_probability` as long as unused colors remain.
    """
    vertex_range: Tuple[int, int] = (1, 8)
    color_range: Tuple[int, int] = (1, 3)
    edge_probability: float = 0.4
    parallel_probability: float = 0.0
    seed: int = 0
    connected: bool = False

    def validate(self) -> 'InstanceGenSpec':
        for name, (low, high), minimum in (('vertex_range', self.vertex_range, 0), ('color_range', self.color_range, 1)):
            if low < minimum or low > high:
                raise ValueError(f"{name} must be a nonempty range starting at {minimum} or above, got {(low, high)}")
        for name, value in (('edge_probability', self.edge_probability), ('parallel_probability', self.parallel_probability)):
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")
        return self


def _draw_instance(spec: InstanceGenSpec, rng: np.random.Generator) -> EdgeColoredMultigraph:
    n = int(rng.integers(spec.vertex_range[0], spec.vertex_range[1] + 1))
    colors = int(rng.integers(spec.color_range[0], spec.color_range[1] + 1))
    vertices = tuple(f"v{i + 1}" for i in range(n))

    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() >= spec.edge_probability:
                continue
            palette = list(rng.permutation(colors) + 1)
            edges.append(ColoredEdge(vertices[i], vertices[j], int(palette.pop(0))))
            while palette and rng.random() < spec.parallel_probability:
                edges.append(ColoredEdge(vertices[i], vertices[j], int(palette.pop(0))))

    return EdgeColoredMultigraph(vertices, tuple(edges))


def generate_instance(spec: InstanceGenSpec) -> EdgeColoredMultigraph:
    """
    Draw a random edge-colored multigraph on vertices v1..vn. Deterministic given the seed.

    Raises:
        ValueError: If the generator settings are invalid, or no connected instance was drawn within
            MAX_CONNECTED_ATTEMPTS attempts.
    """
    spec.validate()
    rng = np.random.default_rng(spec.seed)

    for _ in range(MAX_CONNECTED_ATTEMPTS if spec.connected else 1):
        graph = _draw_instance(spec, rng)
        if not spec.connected or len(graph) <= 1 or nx.is_connected(graph.to_networkx()):
            return graph

    raise ValueError(f"No connected instance within {MAX_CONNECTED_ATTEMPTS} attempts; raise the edge probability")


def generate_digraph(vertex_count: int, arc_probability: float, seed: int = 0) -> Digraph:
    """ Draw a random digraph on v1..vn; each ordered pair becomes an arc with the given probability. """
    if not 0.0 <= arc_probability <= 1.0:
        raise ValueError(f"arc_probability must lie in [0, 1], got {arc_probability}")

    rng = np.random.default_rng(seed)
    vertices = tuple(f"v{i + 1}" for i in range(vertex_count))
    arcs = [(u, v) for u in vertices for v in vertices if u != v and rng.random() < arc_probability]
    return Digraph(vertices, tuple(arcs))
