import pytest

from PyPcCycles.mylib.algebra.prime_field import MAX_MODULUS, MERSENNE_61, PrimeField
from PyPcCycles.mylib.algebra.sz_params import *


def test_defaults():
    params = SZParams()
    assert params.prime == MERSENNE_61
    assert params.trials == 10
    assert params.seed is None
    assert params.validate() is params


@pytest.mark.parametrize("changes", [
    {'trials': 0},
    {'trials': '3'},
    {'seed': -1},
    {'prime': 2},
    {'prime': 4},
    {'prime': MAX_MODULUS + 2},
])
def test_validate_rejects(changes):
    with pytest.raises(ParamsError):
        SZParams().replace(**changes).validate()


def test_replace_returns_a_copy():
    params = SZParams(seed=1)
    changed = params.replace(trials=3)
    assert params.trials == 10
    assert changed.trials == 3
    with pytest.raises(AttributeError):
        params.replace(unknown=1)


def test_resolved_fixes_the_seed():
    params = SZParams()
    resolved = params.resolved()
    assert isinstance(resolved.seed, int)
    assert params.seed is None
    assert SZParams(seed=5).resolved().seed == 5


def test_rng_streams():
    params = SZParams(seed=42)
    assert params.rng_for(1, 2).integers(1 << 62) == params.rng_for(1, 2).integers(1 << 62)
    assert params.rng_for(1, 2).integers(1 << 62) != params.rng_for(2, 1).integers(1 << 62)
    assert SZParams(seed=43).rng_for(1, 2).integers(1 << 62) != params.rng_for(1, 2).integers(1 << 62)


def test_rng_needs_a_seed():
    with pytest.raises(ParamsError):
        SZParams().rng_for(0)


def test_check_dimension():
    params = SZParams(prime=73)
    assert params.check_dimension(18) is params
    with pytest.raises(ParamsError):
        params.check_dimension(19)


def test_field():
    assert SZParams(prime=101).field == PrimeField(101)
    with pytest.raises(ParamsError):
        SZParams(prime=100).field


def test_error_bounds():
    params = SZParams(prime=101, trials=2)
    assert params.per_trial_error_bound(20) == pytest.approx(0.2)
    assert params.error_bound(20) == pytest.approx(0.04)
    assert params.error_bound(20, trials=1) == pytest.approx(0.2)
    assert params.per_trial_error_bound(500) == 1.0


def test_merge_from_config():
    params = SZParams()
    params.merge_dict({'trials': '5', 'seed': 7, 'prime': 101})
    assert params == SZParams(prime=101, trials=5, seed=7)


@pytest.mark.parametrize("dimension, prime", [(0, 3), (1, 5), (18, 73), (36, 149)])
def test_small_prime_for(dimension, prime):
    assert small_prime_for(dimension) == prime


@pytest.mark.parametrize("calls, trials", [(0, 10), (1, 10), (2, 11), (4, 11), (5, 12), (16, 12), (17, 13), (1000, 15)])
def test_boosted_trials(calls, trials):
    assert boosted_trials(10, calls) == trials
