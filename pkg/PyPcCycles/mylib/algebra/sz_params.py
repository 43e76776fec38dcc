import copy
from typing import *

import numpy as np
import sympy

from PyPcCycles.mylib.algebra.prime_field import MAX_MODULUS, MERSENNE_61, FieldError, PrimeField
from PyPcCycles.mylib.config.serializable_config import SerializableConfig


class ParamsError(ValueError):
    """Exception raised for invalid randomness parameters."""


class SZParams(SerializableConfig):
    """
    Parameters of the randomized identity test: the prime p of the field the Tutte matrix is
    evaluated over, the number t of independent trials, and the seed all random streams derive from.

    A seed of None means fresh entropy; `resolved` fixes it once so that it can be reported.
    """

    def __init__(self, prime: int = MERSENNE_61, trials: int = 10, seed: Optional[int] = None):
        super().__init__()
        self.prime = prime
        self.trials = trials
        self.seed = seed

    def __repr__(self) -> str:
        return f"SZParams(prime={self.prime}, trials={self.trials}, seed={self.seed})"

    def __eq__(self, other) -> bool:
        return isinstance(other, SZParams) and self.to_dict() == other.to_dict()

    def validate(self) -> 'SZParams':
        """
        Check the parameters and return self.

        Raises:
            ParamsError: If p is not an odd prime below 2^63, t < 1, or the seed is negative.
        """
        if not isinstance(self.trials, int) or self.trials < 1:
            raise ParamsError(f"The number of trials must be a positive integer, got {self.trials!r}")
        if self.seed is not None and (not isinstance(self.seed, int) or self.seed < 0):
            raise ParamsError(f"The seed must be a non-negative integer, got {self.seed!r}")
        if not isinstance(self.prime, int) or self.prime > MAX_MODULUS or self.prime == 2 or not sympy.isprime(self.prime):
            raise ParamsError(f"The modulus must be an odd prime below 2^63, got {self.prime!r}")
        return self

    def replace(self, **changes) -> 'SZParams':
        result = copy.copy(self)
        for key, value in changes.items():
            if key not in result.__dict__:
                raise AttributeError(f"SZParams has no attribute '{key}'")
            setattr(result, key, value)
        return result

    def resolved(self) -> 'SZParams':
        """ Return a copy whose seed is fixed, drawing fresh entropy if it is None. """
        if self.seed is not None:
            return self.replace()
        return self.replace(seed=int(np.random.SeedSequence().entropy))

    def _require_seed(self) -> int:
        if self.seed is None:
            raise ParamsError("The seed must be resolved before random streams are derived")
        return self.seed

    def rng_for(self, *keys: int) -> np.random.Generator:
        """ Return the random stream identified by `keys`, independent of every other key tuple. """
        return np.random.default_rng(np.random.SeedSequence(entropy=self._require_seed(), spawn_key=keys))

    def check_dimension(self, dimension: int) -> 'SZParams':
        """
        Check that p > 4 * dimension, so that one trial on a matrix of that dimension misses with
        probability below 1/4. Returns self.

        Raises:
            ParamsError: If the prime is too small for the dimension.
        """
        if self.prime <= 4 * dimension:
            raise ParamsError(f"The modulus {self.prime} is too small for dimension {dimension}, it must exceed {4 * dimension}")
        return self

    @property
    def field(self) -> PrimeField:
        try:
            return PrimeField(self.prime)
        except FieldError as e:
            raise ParamsError(str(e)) from e

    def per_trial_error_bound(self, dimension: int) -> float:
        """
        Probability that one trial misses a nonzero polynomial of degree at most `dimension`,
        evaluated at a uniform point of (Z_p \\ {0})^m.
        """
        return min(1.0, dimension / (self.prime - 1))

    def error_bound(self, dimension: int, trials: Optional[int] = None) -> float:
        return self.per_trial_error_bound(dimension) ** (self.trials if trials is None else trials)


def small_prime_for(dimension: int) -> int:
    """ The smallest prime greater than 4 * dimension (and greater than 2). """
    return int(sympy.nextprime(max(4 * dimension, 2)))


def boosted_trials(trials: int, calls: int) -> int:
    """ Trials per call such that `calls` calls keep the error target of a single call: t + ceil(log4(calls)). """
    if calls <= 1:
        return trials
    exponent = 0
    while 4 ** exponent < calls:
        exponent += 1
    return trials + exponent
