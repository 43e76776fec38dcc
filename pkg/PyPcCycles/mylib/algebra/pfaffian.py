"""
Brute-force Pfaffian over Z_p, by summation over all pair partitions. Exponential; meant as a
ground truth for the determinant code.
"""
from dataclasses import dataclass
from typing import *

import numpy as np

from PyPcCycles.mylib.algebra.prime_field import FieldElement, PrimeField
from PyPcCycles.mylib.graph.graph_types import ContractViolationError

MAX_PFAFFIAN_DIMENSION = 14


@dataclass(frozen=True)
class PairPartition:
    """
    A partition of {0..n-1} into pairs, each pair ascending and the pairs sorted by first element.
    `sign` is the signature of the permutation (i_1 j_1 i_2 j_2 ...).
    """
    pairs: Tuple[Tuple[int, int], ...]
    sign: int


def pair_partitions(n: int) -> Iterator[PairPartition]:
    """ Yield all (n-1)!! pair partitions of {0..n-1} for even n, nothing for odd n. """
    if n % 2:
        return

    def expand(remaining: Tuple[int, ...]) -> Iterator[Tuple[Tuple[Tuple[int, int], ...], int]]:
        if not remaining:
            yield (), 1
            return
        first = remaining[0]
        for position in range(1, len(remaining)):
            rest = remaining[1:position] + remaining[position + 1:]
            # moving the partner next to `first` takes position - 1 transpositions
            sign = -1 if position % 2 == 0 else 1
            for pairs, sub_sign in expand(rest):
                yield ((first, remaining[position]),) + pairs, sign * sub_sign

    for pairs, sign in expand(tuple(range(n))):
        yield PairPartition(pairs, sign)


def pfaffian_bruteforce(field: PrimeField, matrix) -> FieldElement:
    """
    Pfaffian of a skew-symmetric matrix over Z_p. Zero for odd dimension, one for the empty matrix.

    Raises:
        ContractViolationError: If the matrix is not square and skew-symmetric, or larger than
            MAX_PFAFFIAN_DIMENSION.
    """
    a = field.array(matrix)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ContractViolationError(f"Expected a square matrix, got shape {a.shape}")
    if not np.array_equal(field.add(a, a.T), field.zeros(a.shape)):
        raise ContractViolationError("The matrix is not skew-symmetric")

    n = a.shape[0]
    if n > MAX_PFAFFIAN_DIMENSION:
        raise ContractViolationError(f"Brute-force Pfaffian is limited to dimension {MAX_PFAFFIAN_DIMENSION}, got {n}")

    entries = [[int(x) for x in row] for row in a]
    total = 0
    for partition in pair_partitions(n):
        product = partition.sign
        for i, j in partition.pairs:
            product = product * entries[i][j] % field.p
            if product == 0:
                break
        total += product

    return field.element(total)
