import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from PyPcCycles.mylib.algebra.sz_params import SZParams
from PyPcCycles.mylib.algebra.tutte_sample import *
from PyPcCycles.mylib.graph.graph_types import ContractViolationError, UncoloredGraph
from PyPcCycles.mylib.oracle.brute_force import perfect_matching_e0_counts

C4 = UncoloredGraph(('v1', 'v2', 'v3', 'v4'), (('v1', 'v2'), ('v2', 'v3'), ('v3', 'v4'), ('v4', 'v1')))


@pytest.fixture
def params():
    return SZParams(seed=2024)


def test_single_edge_views(params):
    graph = UncoloredGraph(('a', 'b'), (('a', 'b'),))
    sample = sample_tutte(graph, [('b', 'a')], params)
    r = sample.variable_map[(0, 1)]
    p = params.prime

    assert sample.n == 2
    assert [[int(x) for x in row] for row in sample.plain] == [[0, r], [p - r, 0]]
    assert [[int(x) for x in row] for row in sample.flipped] == [[0, p - r], [r, 0]]
    assert sample.e0_mask == {(0, 1)}
    assert sample.is_skew_symmetric()

    equal, det_plain, det_flipped = dets_equal(sample)
    assert equal
    assert det_plain == r * r % p


def test_sample_is_reproducible(params):
    first = sample_tutte(C4, [('v1', 'v2')], params)
    second = sample_tutte(C4, [('v1', 'v2')], params, rng=params.rng_for(0))
    assert np.array_equal(first.plain, second.plain)
    assert np.array_equal(first.flipped, second.flipped)
    assert all(1 <= r < params.prime for r in first.variable_map.values())


def test_sample_contract(params):
    with pytest.raises(ContractViolationError):
        sample_tutte(UncoloredGraph(('a', 'b', 'c'), (('a', 'b'),)), [], params)
    with pytest.raises(ContractViolationError):
        sample_tutte(C4, [('v1', 'v3')], params)


def test_c4_with_both_parities_differs(params):
    outcome = run_parity_trials(C4, [('v1', 'v2')], params)
    assert outcome.differ
    assert outcome.det_plain != outcome.det_flipped


@pytest.mark.parametrize("e0", [
    [],
    [('v1', 'v2'), ('v3', 'v4')],     # every perfect matching even
    [('v1', 'v2'), ('v2', 'v3')],     # every perfect matching odd
])
def test_c4_with_one_parity_never_differs(params, e0):
    outcome = run_parity_trials(C4, e0, params, trials=25)
    assert not outcome.differ
    assert outcome.trials_run == 25
    assert outcome.det_plain == outcome.det_flipped


def test_no_perfect_matching_gives_zero_determinants(params):
    star = UncoloredGraph(('c', 'x', 'y', 'z'), (('c', 'x'), ('c', 'y'), ('c', 'z')))
    outcome = run_parity_trials(star, [('c', 'x')], params)
    assert not outcome.differ
    assert outcome.det_plain == 0


def test_trials_do_not_depend_on_batching(params):
    small = run_parity_trials(C4, [('v1', 'v2')], params, stream_key=(3,), batch_elements=1)
    large = run_parity_trials(C4, [('v1', 'v2')], params, stream_key=(3,), batch_elements=10_000)
    assert small.differing_trial == large.differing_trial
    assert small.det_plain == large.det_plain
    assert small.det_flipped == large.det_flipped


def test_trial_streams_match_single_samples(params):
    outcome = run_parity_trials(C4, [('v1', 'v2')], params, stream_key=(7,))
    sample = sample_tutte(C4, [('v1', 'v2')], params, rng=params.rng_for(7, outcome.differing_trial))
    _, det_plain, det_flipped = dets_equal(sample)
    assert (det_plain, det_flipped) == (outcome.det_plain, outcome.det_flipped)


def test_small_prime_error_rate():
    # both parities present: a miss needs a root of a nonzero polynomial of degree <= 4
    params = SZParams(prime=17, trials=1)
    misses = sum(not run_parity_trials(C4, [('v1', 'v2')], params.replace(seed=seed)).differ for seed in range(400))
    assert misses / 400 <= 0.25


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(min_value=0, max_value=100_000), half=st.integers(min_value=1, max_value=4),
       probability=st.floats(min_value=0.3, max_value=0.9))
def test_determinants_differ_iff_both_parities(seed, half, probability):
    rng = np.random.default_rng(seed)
    vertices = tuple(f"v{i}" for i in range(2 * half))
    edges = tuple((u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:] if rng.random() < probability)
    graph = UncoloredGraph(vertices, edges)
    e0 = [edge for edge in edges if rng.random() < 0.5]

    counts = perfect_matching_e0_counts(graph, e0)
    both = len({count % 2 for count in counts}) == 2
    outcome = run_parity_trials(graph, e0, SZParams(seed=seed))
    assert outcome.differ == both
