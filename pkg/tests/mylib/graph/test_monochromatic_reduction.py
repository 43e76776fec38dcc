import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from PyPcCycles.mylib.graph.graph_types import EdgeColoredMultigraph, UnknownVertexError
from PyPcCycles.mylib.graph.monochromatic_reduction import color_set, reduce_monochromatic, reduce_monochromatic_with_trace
from PyPcCycles.mylib.oracle.instance_generator import InstanceGenSpec, generate_instance


def test_path_vanishes():
    path = EdgeColoredMultigraph.from_edges([('a', 'b', 1), ('b', 'c', 2), ('c', 'd', 1)])
    reduced, deleted = reduce_monochromatic_with_trace(path)
    assert reduced.is_empty()
    assert sorted(deleted) == ['a', 'b', 'c', 'd']


def test_long_alternating_path_is_peeled_from_both_ends():
    n = 2000
    path = EdgeColoredMultigraph.from_edges([(f'p{i}', f'p{i + 1}', 1 + i % 2) for i in range(n)])
    reduced, deleted = reduce_monochromatic_with_trace(path)
    assert reduced.is_empty()
    assert len(deleted) == n + 1
    # first in, first out: the two ends alternate
    assert deleted[:4] == ['p0', f'p{n}', 'p1', f'p{n - 1}']


@pytest.mark.parametrize("name, remaining", [
    ('mono-triangle.ecg', 0),
    ('mono-star.ecg', 0),
    ('rainbow-triangle.ecg', 3),
    ('fig1.ecg', 6),
    ('fig2.ecg', 10),
    ('digon.ecg', 2),
])
def test_fixture_reductions(load_fixture, name, remaining):
    assert len(reduce_monochromatic(load_fixture(name))) == remaining


def test_pendant_path_is_stripped_from_cycle():
    graph = EdgeColoredMultigraph.from_edges([
        ('a', 'b', 1), ('b', 'c', 2), ('c', 'a', 3),   # rainbow triangle
        ('a', 'x', 2), ('x', 'y', 1),                  # pendant path at a
    ])
    reduced = reduce_monochromatic(graph)
    assert reduced.vertices == ('a', 'b', 'c')
    assert all(len(reduced.color_set(v)) >= 2 for v in reduced.vertices)


def test_isolated_vertices_are_deleted():
    graph = EdgeColoredMultigraph(('lonely',))
    assert reduce_monochromatic(graph).is_empty()


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10_000), order_seed=st.integers(min_value=0, max_value=10_000))
def test_reduction_is_order_independent_and_idempotent(seed, order_seed):
    graph = generate_instance(InstanceGenSpec(vertex_range=(1, 9), color_range=(1, 3), edge_probability=0.45,
                                              parallel_probability=0.2, seed=seed))
    reduced = reduce_monochromatic(graph)
    shuffled, _ = reduce_monochromatic_with_trace(graph, rng=np.random.default_rng(order_seed))

    assert shuffled == reduced
    assert reduce_monochromatic(reduced) == reduced
    assert all(len(reduced.color_set(v)) >= 2 for v in reduced.vertices)


def test_color_set(load_fixture):
    graph = load_fixture('fig1.ecg')
    assert color_set(graph, 'v3') == {2, 3}
    assert color_set(graph, 'v6') == {1, 3}
    with pytest.raises(UnknownVertexError):
        color_set(graph, 'v7')
