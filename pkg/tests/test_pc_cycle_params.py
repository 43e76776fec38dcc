import pytest

from PyPcCycles.mylib.algebra.prime_field import MERSENNE_61
from PyPcCycles.mylib.algebra.sz_params import SZParams
from PyPcCycles.mylib.algebra.tutte_sample import DEFAULT_BATCH_ELEMENTS
from PyPcCycles.pc_cycle_detect import DEFAULT_EXTRACTION_RETRIES
from PyPcCycles.pc_cycle_params import PcCycleParams


@pytest.fixture
def params():
    return PcCycleParams()


def test_initialization(params):
    """Test if the class initializes with correct default values"""
    assert params.sz == SZParams()
    assert params.extraction_max_retries == DEFAULT_EXTRACTION_RETRIES
    assert params.determinant_batch_elements == DEFAULT_BATCH_ELEMENTS
    assert params.log_level == 'WARNING'


def test_serialization(params):
    """Test serialization to dictionary"""
    params_dict = params.to_dict()
    assert params_dict['sz'] == {'prime': MERSENNE_61, 'trials': 10, 'seed': None}
    assert params_dict['extraction_max_retries'] == DEFAULT_EXTRACTION_RETRIES
    assert 'log_level' in params_dict


def test_merge_dict(params):
    """Test merging dictionary into parameters"""
    params.merge_dict({
        'sz': {'trials': 4, 'seed': 123},
        'extraction_max_retries': '5',
        'log_level': 'debug',
        'unknown_key': 1,
    })
    assert params.sz.trials == 4
    assert params.sz.seed == 123
    assert params.sz.prime == MERSENNE_61
    assert isinstance(params.sz, SZParams)
    assert params.extraction_max_retries == 5
    assert params.log_level == 'debug'
    assert not hasattr(params, 'unknown_key')


def test_round_trip_through_dict(params):
    params.sz.seed = 77
    params.determinant_batch_elements = 1000

    restored = PcCycleParams()
    restored.merge_dict(params.to_dict())
    assert restored.to_dict() == params.to_dict()


def test_apply_defaults(params):
    """Test resetting parameters to defaults"""
    params.sz.trials = 1
    params.log_level = 'DEBUG'
    params.apply_defaults()
    assert params.sz.trials == 10
    assert params.log_level == 'WARNING'
