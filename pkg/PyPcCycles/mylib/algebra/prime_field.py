"""
Exact arithmetic over Z_p on numpy arrays, and determinants by Gaussian elimination.

Three backends keep every operation exact:

- ``int64``: p < 2^31, products fit into 62 bits.
- ``mersenne61``: p = 2^61 - 1 on uint64, products are split into 31/30 bit limbs and folded
  using 2^61 = 1 (mod p).
- ``object``: any other p < 2^63, Python integers in object arrays.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import *

import numpy as np
import sympy

logger = logging.getLogger(__name__)

MERSENNE_61 = (1 << 61) - 1
MAX_MODULUS = (1 << 63) - 1


class FieldError(ArithmeticError):
    """Exception raised for invalid moduli, division by zero or malformed matrices."""


class FieldBackend(Enum):
    INT64 = 'int64'
    MERSENNE61 = 'mersenne61'
    OBJECT = 'object'


_M61 = np.uint64(MERSENNE_61)
_M31 = np.uint64((1 << 31) - 1)
_M30 = np.uint64((1 << 30) - 1)
_S1 = np.uint64(1)
_S30 = np.uint64(30)
_S31 = np.uint64(31)
_S61 = np.uint64(61)


def _mersenne_fold(x: np.ndarray) -> np.ndarray:
    x = (x & _M61) + (x >> _S61)
    x = (x & _M61) + (x >> _S61)
    return np.where(x >= _M61, x - _M61, x)


def _mersenne_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a_hi, a_lo = a >> _S31, a & _M31
    b_hi, b_lo = b >> _S31, b & _M31
    mid = a_hi * b_lo + a_lo * b_hi
    total = ((a_hi * b_hi) << _S1) + (mid >> _S30) + ((mid & _M30) << _S31) + a_lo * b_lo
    return _mersenne_fold(total)


@dataclass(frozen=True)
class FieldElement:
    """ A residue in [0, p). """
    value: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, 'value', int(self.value) % self.p)

    def _coerce(self, other: Union['FieldElement', int]) -> int:
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise FieldError(f"Cannot combine elements of Z_{self.p} and Z_{other.p}")
            return other.value
        return int(other)

    def __add__(self, other):
        return FieldElement(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.value - self._coerce(other), self.p)

    def __rsub__(self, other):
        return FieldElement(self._coerce(other) - self.value, self.p)

    def __mul__(self, other):
        return FieldElement(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.p)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** -exponent
        return FieldElement(pow(self.value, exponent, self.p), self.p)

    def inverse(self) -> 'FieldElement':
        if self.value == 0:
            raise FieldError("Division by zero")
        return FieldElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * FieldElement(self._coerce(other), self.p).inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.p))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.p})"


class PrimeField:
    """
    The field Z_p with vectorised element-wise operations on arrays of residues.

    Arrays handed to the operations must hold reduced residues in the backend dtype; use `array`
    to convert arbitrary integers.
    """

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool):
            raise FieldError(f"The modulus must be an integer, got {p!r}")
        if p == 2:
            raise FieldError("Characteristic 2 is not supported: skew-symmetric matrices degenerate there")
        if p > MAX_MODULUS:
            raise FieldError(f"The modulus {p} exceeds 2^63 - 1")
        if not sympy.isprime(p):
            raise FieldError(f"The modulus {p} is not prime")

        self.p = p
        if p == MERSENNE_61:
            self.backend = FieldBackend.MERSENNE61
            self.dtype = np.dtype(np.uint64)
        elif p < (1 << 31):
            self.backend = FieldBackend.INT64
            self.dtype = np.dtype(np.int64)
        else:
            self.backend = FieldBackend.OBJECT
            self.dtype = np.dtype(object)

        logger.debug(f"Prime field Z_{p} uses the {self.backend.value} backend")

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(self.p)

    def element(self, value: int) -> FieldElement:
        return FieldElement(value, self.p)

    def array(self, values) -> np.ndarray:
        """ Convert integers (or FieldElements) of any sign to reduced residues in the backend dtype. """
        source = np.asarray(values, dtype=object)
        reduced = np.vectorize(lambda x: int(x) % self.p, otypes=[object])(source) if source.size else source
        return np.asarray(reduced, dtype=self.dtype).reshape(source.shape)

    def zeros(self, shape) -> np.ndarray:
        if self.backend is FieldBackend.OBJECT:
            return np.full(shape, 0, dtype=object)
        return np.zeros(shape, dtype=self.dtype)

    def ones(self, shape) -> np.ndarray:
        if self.backend is FieldBackend.OBJECT:
            return np.full(shape, 1, dtype=object)
        return np.ones(shape, dtype=self.dtype)

    def random_nonzero(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """ Draw `size` residues uniformly from [1, p). """
        draws = rng.integers(1, self.p, size=size, dtype=np.int64)
        if self.backend is FieldBackend.OBJECT:
            return np.array([int(x) for x in draws], dtype=object)
        return draws.astype(self.dtype)

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.backend is FieldBackend.MERSENNE61:
            total = a + b
            return np.where(total >= _M61, total - _M61, total)
        return (a + b) % self.p

    def neg(self, a: np.ndarray) -> np.ndarray:
        if self.backend is FieldBackend.MERSENNE61:
            return np.where(a == 0, a, _M61 - a)
        return (-a) % self.p

    def sub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.backend is FieldBackend.MERSENNE61:
            total = a + (_M61 - b)
            return np.where(total >= _M61, total - _M61, total)
        return (a - b) % self.p

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.backend is FieldBackend.MERSENNE61:
            return _mersenne_mul(a, b)
        return (a * b) % self.p

    def inverse(self, a: np.ndarray) -> np.ndarray:
        """
        Element-wise inverse.

        Raises:
            FieldError: If an entry is zero.
        """
        values = [int(x) for x in np.ravel(a)]
        if any(x == 0 for x in values):
            raise FieldError("Division by zero")
        inverses = [pow(x, -1, self.p) for x in values]
        return np.array(inverses, dtype=self.dtype).reshape(np.shape(a))

    def to_elements(self, a: np.ndarray) -> List[FieldElement]:
        return [self.element(int(x)) for x in np.ravel(a)]

    def determinants(self, matrices: np.ndarray) -> np.ndarray:
        """
        Determinants of a stack of square matrices, shape (b, n, n) -> (b,).

        Gaussian elimination with first-nonzero pivoting, run on all matrices in lockstep. Each
        elimination step only touches the rows and columns where some matrix of the stack has a
        nonzero multiplier, which keeps sparse matrices cheap.

        Raises:
            FieldError: If the matrices are not square.
        """
        a = np.array(matrices, dtype=self.dtype, copy=True)
        if a.ndim != 3 or a.shape[1] != a.shape[2]:
            raise FieldError(f"Expected a stack of square matrices, got shape {a.shape}")

        count, n = a.shape[0], a.shape[1]
        det = self.ones(count)
        alive = np.ones(count, dtype=bool)
        one = self.ones(count)

        for k in range(n):
            nonzero = a[:, k:, k] != 0
            alive &= nonzero.any(axis=1)
            if not alive.any():
                break

            offset = np.argmax(nonzero, axis=1)
            swap = np.nonzero(alive & (offset != 0))[0]
            if swap.size:
                pivot_rows = k + offset[swap]
                pivot_copy = a[swap, pivot_rows, :].copy()
                a[swap, pivot_rows, :] = a[swap, k, :]
                a[swap, k, :] = pivot_copy
                det[swap] = self.neg(det[swap])

            pivots = np.where(alive, a[:, k, k], one)
            det = self.mul(det, pivots)
            if k == n - 1:
                break

            factors = self.mul(a[:, k + 1:, k], self.inverse(pivots)[:, None])
            factors[~alive] = 0

            rows = np.nonzero((factors != 0).any(axis=0))[0]
            cols = np.nonzero((a[:, k, k + 1:] != 0).any(axis=0))[0] + k + 1
            if rows.size == 0 or cols.size == 0:
                continue

            block_index = (slice(None), (rows + k + 1)[:, None], cols[None, :])
            update = self.mul(factors[:, rows][:, :, None], a[:, k, cols][:, None, :])
            a[block_index] = self.sub(a[block_index], update)

        det[~alive] = 0
        return det

    def determinant(self, matrix) -> FieldElement:
        """
        Determinant of a single square matrix.

        Raises:
            FieldError: If the matrix is not square.
        """
        a = self.array(matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise FieldError(f"Expected a square matrix, got shape {a.shape}")
        if a.shape[0] == 0:
            return self.element(1)
        return self.element(int(self.determinants(a[None, :, :])[0]))
