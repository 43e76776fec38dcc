import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from PyPcCycles.mylib.graph.graph_types import ContractViolationError, UncoloredGraph
from PyPcCycles.mylib.graph.matching import Matching, Parity, maximum_matching, parity
from PyPcCycles.mylib.oracle.brute_force import maximum_matching_size


def random_graph(seed: int, n: int, probability: float) -> UncoloredGraph:
    generated = nx.gnp_random_graph(n, probability, seed=seed)
    return UncoloredGraph(tuple(f"v{i}" for i in generated.nodes), tuple((f"v{u}", f"v{v}") for u, v in generated.edges))


@pytest.mark.parametrize("name, size", [('c4.g', 2), ('petersen.g', 5)])
def test_fixture_matchings_are_perfect(load_fixture, name, size):
    graph = load_fixture(name)
    matching = maximum_matching(graph)
    assert len(matching) == size
    assert matching.is_perfect(graph)


def test_path_of_three():
    graph = UncoloredGraph(('a', 'b', 'c'), (('a', 'b'), ('b', 'c')))
    matching = maximum_matching(graph)
    assert len(matching) == 1
    assert not matching.is_perfect(graph)


def test_odd_cycle_with_pendant_needs_blossom():
    # greedy picks a-b and c-d, the augmenting path runs through the triangle
    graph = UncoloredGraph(('a', 'b', 'c', 'd', 'e', 'f'),
                           (('a', 'b'), ('b', 'c'), ('c', 'a'), ('c', 'd'), ('d', 'e'), ('a', 'f')))
    assert len(maximum_matching(graph)) == 3


def test_maximum_matching_is_deterministic(load_fixture):
    graph = load_fixture('petersen.g')
    assert maximum_matching(graph) == maximum_matching(graph)


@settings(max_examples=80, deadline=None)
@given(seed=st.integers(min_value=0, max_value=100_000), n=st.integers(min_value=0, max_value=12),
       probability=st.floats(min_value=0.1, max_value=0.7))
def test_maximum_matching_size_agrees_with_references(seed, n, probability):
    graph = random_graph(seed, n, probability)
    matching = maximum_matching(graph)

    assert matching.normalized(graph) == matching
    assert len(matching) == maximum_matching_size(graph)
    assert len(matching) == len(nx.max_weight_matching(graph.to_networkx(), maxcardinality=True))


def test_matching_rejects_shared_vertices():
    with pytest.raises(ContractViolationError):
        Matching(frozenset({('a', 'b'), ('b', 'c')}))


def test_is_perfect_rejects_foreign_edges():
    graph = UncoloredGraph(('a', 'b', 'c', 'd'), (('a', 'b'), ('c', 'd')))
    assert Matching(frozenset({('a', 'b'), ('c', 'd')})).is_perfect(graph)
    assert not Matching(frozenset({('a', 'c'), ('b', 'd')})).is_perfect(graph)


@pytest.mark.parametrize("e0, expected", [
    ([], Parity.EVEN),
    ([('b', 'a')], Parity.ODD),
    ([('a', 'b'), ('d', 'c')], Parity.EVEN),
    ([('a', 'c')], Parity.EVEN),
])
def test_parity(e0, expected):
    matching = Matching(frozenset({('a', 'b'), ('c', 'd')}))
    assert parity(matching, e0) is expected


def test_parity_of():
    assert Parity.of(0) is Parity.EVEN
    assert Parity.of(7) is Parity.ODD
