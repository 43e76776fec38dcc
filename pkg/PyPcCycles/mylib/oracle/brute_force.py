"""
Exponential-time ground truth: exhaustive enumeration of PC cycles, PC cycle subgraph sizes,
perfect matchings and dicycles of small graphs. Every function enforces a hard size cap.
"""
import logging
from functools import lru_cache
from typing import *

from PyPcCycles.mylib.graph.graph_types import *
from PyPcCycles.mylib.graph.matching import Matching
from PyPcCycles.mylib.graph.pc_cycle import PcCycle

logger = logging.getLogger(__name__)

MAX_CYCLE_VERTICES = 12
MAX_MATCHING_ENUMERATION_VERTICES = 20
MAX_MATCHING_COUNT_VERTICES = 64


class OracleSizeLimitError(ValueError):
    """Exception raised when an input exceeds the size cap of a brute-force oracle."""

    def __init__(self, oracle: str, size: int, limit: int):
        super().__init__(f"{oracle}: {size} vertices exceed the limit of {limit}")
        self.oracle = oracle
        self.size = size
        self.limit = limit


def _check_size(oracle: str, size: int, limit: int) -> None:
    if size > limit:
        raise OracleSizeLimitError(oracle, size, limit)


def enumerate_pc_cycles(graph: EdgeColoredMultigraph) -> List[PcCycle]:
    """
    Return every PC cycle of `graph` exactly once, PC 2-cycles (two parallel edges of different
    colors) included.

    Each cycle starts at its vertex that comes first in vertex order and runs in the orientation
    whose sequence of edge indices is lexicographically smaller. The list is sorted by length,
    then by that sequence.

    Raises:
        OracleSizeLimitError: If the graph has more than MAX_CYCLE_VERTICES vertices.
    """
    _check_size("enumerate_pc_cycles", len(graph), MAX_CYCLE_VERTICES)

    edge_index = {edge: i for i, edge in enumerate(graph.edges)}
    found: Dict[FrozenSet[ColoredEdge], Tuple[int, ...]] = {}

    for start in graph.vertices:
        start_position = graph.position(start)
        path = [start]
        on_path = {start}
        path_edges: List[ColoredEdge] = []

        def extend(vertex: Vertex) -> None:
            for edge in graph.incident_edges(vertex):
                if path_edges and (edge == path_edges[-1] or edge.color == path_edges[-1].color):
                    continue
                neighbour = edge.other(vertex)

                if neighbour == start:
                    if path_edges and edge.color != path_edges[0].color:
                        _record(path_edges + [edge])
                    continue

                if neighbour in on_path or graph.position(neighbour) < start_position:
                    continue

                path.append(neighbour)
                on_path.add(neighbour)
                path_edges.append(edge)
                extend(neighbour)
                path_edges.pop()
                on_path.discard(neighbour)
                path.pop()

        def _record(cycle_edges: List[ColoredEdge]) -> None:
            key = frozenset(cycle_edges)
            indices = tuple(edge_index[edge] for edge in cycle_edges)
            reverse = tuple(reversed(indices))
            best = min(indices, reverse)
            if key not in found or best < found[key]:
                found[key] = best

        extend(start)

    cycles = []
    for indices in sorted(found.values(), key=lambda seq: (len(seq), seq)):
        edges = [graph.edges[i] for i in indices]
        cycles.append(_cycle_from_start(graph, edges))

    logger.debug(f"Enumerated {len(cycles)} PC cycles on {len(graph)} vertices")
    return cycles


def _cycle_from_start(graph: EdgeColoredMultigraph, edges: List[ColoredEdge]) -> PcCycle:
    """ Build the cycle that starts at the first-ordered vertex and traverses `edges` in sequence. """
    vertices_of_cycle = {v for edge in edges for v in (edge.u, edge.v)}
    current = min(vertices_of_cycle, key=graph.position)
    vertices = []
    for edge in edges:
        vertices.append(current)
        current = edge.other(current)
    return PcCycle(tuple(vertices), tuple(edges))


def has_pc_cycle(graph: EdgeColoredMultigraph) -> bool:
    return bool(enumerate_pc_cycles(graph))


def has_odd_pc_cycle(graph: EdgeColoredMultigraph) -> bool:
    return any(cycle.is_odd() for cycle in enumerate_pc_cycles(graph))


def pc_cycle_subgraph_sizes(graph: EdgeColoredMultigraph) -> FrozenSet[int]:
    """
    Return all r such that `graph` has a PC cycle subgraph (a union of vertex-disjoint PC cycles)
    with exactly r edges. Always contains 0.

    Raises:
        OracleSizeLimitError: If the graph has more than MAX_CYCLE_VERTICES vertices.
    """
    cycles = enumerate_pc_cycles(graph)

    cycles_by_lowest: Dict[int, List[Tuple[int, int]]] = {}
    for cycle in cycles:
        positions = [graph.position(v) for v in cycle.vertices]
        mask = sum(1 << i for i in positions)
        cycles_by_lowest.setdefault(min(positions), []).append((mask, cycle.length))

    @lru_cache(maxsize=None)
    def sizes(available: int) -> FrozenSet[int]:
        if available == 0:
            return frozenset({0})
        lowest = (available & -available).bit_length() - 1
        result = set(sizes(available & ~(1 << lowest)))
        for mask, length in cycles_by_lowest.get(lowest, ()):
            if mask & available == mask:
                result.update(length + rest for rest in sizes(available & ~mask))
        return frozenset(result)

    return sizes((1 << len(graph)) - 1)


def _edge_masks(graph: UncoloredGraph, e0: Iterable[Edge]) -> Tuple[List[List[Tuple[int, bool]]], Set[Edge]]:
    e0_edges = graph.normalize_edges(e0)
    neighbours: List[List[Tuple[int, bool]]] = [[] for _ in graph.vertices]
    for u, v in graph.edges:
        i, j = graph.position(u), graph.position(v)
        in_e0 = (u, v) in e0_edges
        neighbours[i].append((j, in_e0))
        neighbours[j].append((i, in_e0))
    return neighbours, e0_edges


def enumerate_perfect_matchings(graph: UncoloredGraph, e0: Iterable[Edge] = ()) -> List[Tuple[Matching, int]]:
    """
    Return every perfect matching of `graph` once, with its number of E0 edges. The lowest
    uncovered vertex is matched first.

    Raises:
        OracleSizeLimitError: If the graph has more than MAX_MATCHING_ENUMERATION_VERTICES vertices.
        ContractViolationError: If an E0 edge is not an edge of the graph.
    """
    _check_size("enumerate_perfect_matchings", len(graph), MAX_MATCHING_ENUMERATION_VERTICES)
    neighbours, _ = _edge_masks(graph, e0)
    n = len(graph)
    if n % 2:
        return []

    results = []
    chosen: List[Edge] = []

    def branch(uncovered: int, count: int) -> None:
        if uncovered == 0:
            results.append((Matching(frozenset(chosen)), count))
            return
        lowest = (uncovered & -uncovered).bit_length() - 1
        for partner, in_e0 in neighbours[lowest]:
            if uncovered >> partner & 1:
                chosen.append(graph.edge_key(graph.vertices[lowest], graph.vertices[partner]))
                branch(uncovered & ~(1 << lowest) & ~(1 << partner), count + in_e0)
                chosen.pop()

    branch((1 << n) - 1, 0)
    return results


def perfect_matching_e0_counts(graph: UncoloredGraph, e0: Iterable[Edge] = ()) -> FrozenSet[int]:
    """
    Return the set of values |M ∩ E0| over all perfect matchings M of `graph` (empty if there is
    none), memoised over the set of uncovered vertices.

    Raises:
        OracleSizeLimitError: If the graph has more than MAX_MATCHING_COUNT_VERTICES vertices.
        ContractViolationError: If an E0 edge is not an edge of the graph.
    """
    _check_size("perfect_matching_e0_counts", len(graph), MAX_MATCHING_COUNT_VERTICES)
    neighbours, _ = _edge_masks(graph, e0)
    n = len(graph)
    if n % 2:
        return frozenset()

    @lru_cache(maxsize=None)
    def counts(uncovered: int) -> FrozenSet[int]:
        if uncovered == 0:
            return frozenset({0})
        lowest = (uncovered & -uncovered).bit_length() - 1
        result = set()
        for partner, in_e0 in neighbours[lowest]:
            if uncovered >> partner & 1:
                rest = counts(uncovered & ~(1 << lowest) & ~(1 << partner))
                result.update(count + in_e0 for count in rest)
        return frozenset(result)

    return counts((1 << n) - 1)


def maximum_matching_size(graph: UncoloredGraph) -> int:
    """
    Size of a maximum matching by exhaustive search.

    Raises:
        OracleSizeLimitError: If the graph has more than MAX_MATCHING_ENUMERATION_VERTICES vertices.
    """
    _check_size("maximum_matching_size", len(graph), MAX_MATCHING_ENUMERATION_VERTICES)
    neighbours, _ = _edge_masks(graph, ())

    @lru_cache(maxsize=None)
    def best(available: int) -> int:
        if available == 0:
            return 0
        lowest = (available & -available).bit_length() - 1
        without = available & ~(1 << lowest)
        result = best(without)
        for partner, _ in neighbours[lowest]:
            if without >> partner & 1:
                result = max(result, 1 + best(without & ~(1 << partner)))
        return result

    return best((1 << len(graph)) - 1)


def enumerate_dicycles(digraph: Digraph) -> List[Tuple[Vertex, ...]]:
    """
    Return every directed cycle once, as a vertex sequence starting at its first-ordered vertex.

    Raises:
        OracleSizeLimitError: If the digraph has more than MAX_CYCLE_VERTICES vertices.
    """
    _check_size("enumerate_dicycles", len(digraph.vertices), MAX_CYCLE_VERTICES)

    position = {v: i for i, v in enumerate(digraph.vertices)}
    successors: Dict[Vertex, List[Vertex]] = {v: [] for v in digraph.vertices}
    for u, v in digraph.arcs:
        successors[u].append(v)

    cycles = []
    for start in digraph.vertices:
        path = [start]

        def extend(vertex: Vertex) -> None:
            for successor in successors[vertex]:
                if successor == start:
                    cycles.append(tuple(path))
                elif position[successor] > position[start] and successor not in path:
                    path.append(successor)
                    extend(successor)
                    path.pop()

        extend(start)
    return cycles


def has_odd_dicycle(digraph: Digraph) -> bool:
    return any(len(cycle) % 2 for cycle in enumerate_dicycles(digraph))
