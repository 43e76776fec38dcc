"""
Matchings in simple uncolored graphs: the Matching value type, E0-parity, and a deterministic
maximum-cardinality matching (Edmonds' blossom algorithm, O(V^3)).
"""
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import *

from PyPcCycles.mylib.graph.graph_types import ContractViolationError, Edge, UncoloredGraph, Vertex


class Parity(Enum):
    EVEN = 0
    ODD = 1

    @classmethod
    def of(cls, count: int) -> 'Parity':
        return cls(count % 2)


@dataclass(frozen=True)
class Matching:
    """ A set of vertex-disjoint edges, each given as a pair of vertices. """
    edges: FrozenSet[Edge] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, 'edges', frozenset(self.edges))
        covered = set()
        for u, v in self.edges:
            if u in covered or v in covered or u == v:
                raise ContractViolationError(f"Edge {u}-{v} shares a vertex with another matching edge")
            covered.update((u, v))
        object.__setattr__(self, '_covered', frozenset(covered))

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def covered_vertices(self) -> FrozenSet[Vertex]:
        return self._covered

    def normalized(self, graph: UncoloredGraph) -> 'Matching':
        """
        Return the matching with edges in the normalized orientation of `graph`.

        Raises:
            ContractViolationError: If an edge is not an edge of `graph`.
        """
        return Matching(graph.normalize_edges(self.edges))

    def is_perfect(self, graph: UncoloredGraph) -> bool:
        """ Whether the matching consists of edges of `graph` and covers all its vertices. """
        try:
            self.normalized(graph)
        except ContractViolationError:
            return False
        return self._covered == frozenset(graph.vertices)


def parity(matching: Matching, e0: Iterable[Edge]) -> Parity:
    """ Return the parity of |M ∩ E0|. Edges are compared as unordered pairs. """
    e0_pairs = {frozenset(edge) for edge in e0}
    return Parity.of(sum(1 for edge in matching.edges if frozenset(edge) in e0_pairs))


class _BlossomSearch:
    """
    State of Edmonds' algorithm on vertex indices 0..n-1. `match[v]` is the partner of v or -1.

    An augmenting path search grows an alternating BFS tree from one exposed root. Odd cycles
    (blossoms) are contracted implicitly by mapping all their vertices to a common `base`.
    """

    def __init__(self, adjacency: List[List[int]]):
        self.adjacency = adjacency
        self.n = len(adjacency)
        self.match = [-1] * self.n

    def greedy_initialize(self) -> None:
        for v in range(self.n):
            if self.match[v] == -1:
                for w in self.adjacency[v]:
                    if self.match[w] == -1:
                        self.match[v] = w
                        self.match[w] = v
                        break

    def run(self) -> List[int]:
        self.greedy_initialize()
        for root in range(self.n):
            if self.match[root] == -1:
                end = self._find_augmenting_path(root)
                if end != -1:
                    self._augment(end)
        return self.match

    def _augment(self, v: int) -> None:
        while v != -1:
            parent_vertex = self.parent[v]
            next_vertex = self.match[parent_vertex]
            self.match[v] = parent_vertex
            self.match[parent_vertex] = v
            v = next_vertex

    def _lowest_common_ancestor(self, a: int, b: int) -> int:
        on_path = [False] * self.n
        while True:
            a = self.base[a]
            on_path[a] = True
            if self.match[a] == -1:
                break
            a = self.parent[self.match[a]]
        while True:
            b = self.base[b]
            if on_path[b]:
                return b
            b = self.parent[self.match[b]]

    def _mark_path(self, v: int, blossom_base: int, child: int) -> None:
        while self.base[v] != blossom_base:
            self.in_blossom[self.base[v]] = True
            self.in_blossom[self.base[self.match[v]]] = True
            self.parent[v] = child
            child = self.match[v]
            v = self.parent[self.match[v]]

    def _find_augmenting_path(self, root: int) -> int:
        """ Return the exposed end vertex of an augmenting path from `root`, or -1. """
        self.outer = [False] * self.n
        self.parent = [-1] * self.n
        self.base = list(range(self.n))

        self.outer[root] = True
        queue = deque([root])

        while queue:
            v = queue.popleft()
            for w in self.adjacency[v]:
                if self.base[v] == self.base[w] or self.match[v] == w:
                    continue

                if w == root or (self.match[w] != -1 and self.parent[self.match[w]] != -1):
                    # w is an outer vertex of the same tree: contract the blossom
                    blossom_base = self._lowest_common_ancestor(v, w)
                    self.in_blossom = [False] * self.n
                    self._mark_path(v, blossom_base, w)
                    self._mark_path(w, blossom_base, v)
                    for u in range(self.n):
                        if self.in_blossom[self.base[u]]:
                            self.base[u] = blossom_base
                            if not self.outer[u]:
                                self.outer[u] = True
                                queue.append(u)

                elif self.parent[w] == -1:
                    self.parent[w] = v
                    if self.match[w] == -1:
                        return w
                    partner = self.match[w]
                    self.outer[partner] = True
                    queue.append(partner)
        return -1


def maximum_matching(graph: UncoloredGraph) -> Matching:
    """
    Return a maximum-cardinality matching of `graph`.

    Vertices and neighbour lists are scanned in input order, so the result is deterministic.
    """
    index = {vertex: i for i, vertex in enumerate(graph.vertices)}
    adjacency = [[index[w] for w in graph.adjacency[vertex]] for vertex in graph.vertices]

    match = _BlossomSearch(adjacency).run()

    edges = []
    for i, j in enumerate(match):
        if j > i:
            edges.append(graph.edge_key(graph.vertices[i], graph.vertices[j]))
    return Matching(frozenset(edges))
