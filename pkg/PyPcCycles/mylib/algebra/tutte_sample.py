"""
Random evaluations of the Tutte matrix of a graph and of its sign-flipped variant.

For a graph on v_1..v_n the Tutte matrix has x_ij at (i, j) and -x_ij at (j, i) for every edge
v_i v_j (i < j), zeros elsewhere. The flipped variant negates both entries of every edge in E0.
Both determinants are squares of Pfaffians that sum over perfect matchings, and they agree as
polynomials exactly when all perfect matchings have the same E0-parity.
"""
import logging
from dataclasses import dataclass
from typing import *

import numpy as np

from PyPcCycles.mylib.algebra.prime_field import FieldElement, PrimeField
from PyPcCycles.mylib.algebra.sz_params import SZParams
from PyPcCycles.mylib.graph.graph_types import ContractViolationError, Edge, UncoloredGraph

logger = logging.getLogger(__name__)

DEFAULT_BATCH_ELEMENTS = 2_000_000


@dataclass(frozen=True)
class SkewSample:
    """
    The plain and the E0-flipped matrix evaluated at the same nonzero draws.

    Attributes:
        n: Matrix dimension, the number of vertices.
        plain: The Tutte matrix with x_ij replaced by r_ij.
        flipped: The same with the signs of the E0 entries negated.
        variable_map: The draw r_ij per vertex index pair (i, j), i < j.
        e0_mask: The index pairs whose sign is flipped.
        field: The field the entries live in.
    """
    n: int
    plain: np.ndarray
    flipped: np.ndarray
    variable_map: Mapping[Tuple[int, int], int]
    e0_mask: FrozenSet[Tuple[int, int]]
    field: PrimeField

    def is_skew_symmetric(self) -> bool:
        f = self.field
        return all(np.array_equal(f.add(view, view.T), f.zeros(view.shape)) for view in (self.plain, self.flipped))


class _EdgeLayout:
    """ Index arrays of the upper-triangle entries for a graph and an E0 subset. """

    def __init__(self, graph: UncoloredGraph, e0: Iterable[Edge]):
        if len(graph.vertices) % 2:
            raise ContractViolationError(f"The Tutte matrix test needs an even number of vertices, got {len(graph.vertices)}")

        e0_edges = graph.normalize_edges(e0)
        self.n = len(graph.vertices)
        self.rows = np.array([graph.position(u) for u, _ in graph.edges], dtype=np.intp)
        self.cols = np.array([graph.position(v) for _, v in graph.edges], dtype=np.intp)
        self.flip = np.array([edge in e0_edges for edge in graph.edges], dtype=bool)

    @property
    def edge_count(self) -> int:
        return len(self.rows)

    def fill(self, field: PrimeField, draws: np.ndarray, out_plain: np.ndarray, out_flipped: np.ndarray) -> None:
        negated = field.neg(draws)
        out_plain[self.rows, self.cols] = draws
        out_plain[self.cols, self.rows] = negated
        flipped_upper = np.where(self.flip, negated, draws)
        flipped_lower = np.where(self.flip, draws, negated)
        out_flipped[self.rows, self.cols] = flipped_upper
        out_flipped[self.cols, self.rows] = flipped_lower


def sample_tutte(graph: UncoloredGraph, e0: Iterable[Edge], params: SZParams,
                 rng: Optional[np.random.Generator] = None) -> SkewSample:
    """
    Evaluate the plain and E0-flipped Tutte matrix at one uniform point of (Z_p \\ {0})^|E|.

    Draws are taken in edge order, so the sample is reproducible given the stream.

    Args:
        graph: The graph; needs an even number of vertices.
        e0: The edges whose signs are flipped, a subset of the graph's edges.
        params: Supplies the prime and, if `rng` is None, the seed (stream key (0,)).
        rng: The random stream to draw from.

    Raises:
        ContractViolationError: For an odd number of vertices or an E0 edge that is not in the graph.
    """
    layout = _EdgeLayout(graph, e0)
    field = params.field
    if rng is None:
        rng = params.rng_for(0)

    draws = field.random_nonzero(rng, layout.edge_count)
    plain = field.zeros((layout.n, layout.n))
    flipped = field.zeros((layout.n, layout.n))
    layout.fill(field, draws, plain, flipped)

    return SkewSample(
        n=layout.n,
        plain=plain,
        flipped=flipped,
        variable_map={(int(i), int(j)): int(r) for i, j, r in zip(layout.rows, layout.cols, draws)},
        e0_mask=frozenset((int(i), int(j)) for i, j, f in zip(layout.rows, layout.cols, layout.flip) if f),
        field=field)


def dets_equal(sample: SkewSample) -> Tuple[bool, FieldElement, FieldElement]:
    """ Compute both determinants of a sample and compare them. """
    dets = sample.field.determinants(np.stack([sample.plain, sample.flipped]))
    det_plain, det_flipped = sample.field.to_elements(dets)
    return det_plain == det_flipped, det_plain, det_flipped


@dataclass(frozen=True)
class TrialOutcome:
    """
    Result of up to t determinant trials.

    Attributes:
        differing_trial: Index of the first trial whose determinants differ, None if all agreed.
        det_plain: The plain determinant of that trial, or of the last trial run.
        det_flipped: The flipped determinant of the same trial.
        trials_run: Number of trials evaluated (batches are evaluated whole).
    """
    differing_trial: Optional[int]
    det_plain: FieldElement
    det_flipped: FieldElement
    trials_run: int

    @property
    def differ(self) -> bool:
        return self.differing_trial is not None


def run_parity_trials(graph: UncoloredGraph, e0: Iterable[Edge], params: SZParams,
                      stream_key: Sequence[int] = (),
                      trials: Optional[int] = None,
                      batch_elements: int = DEFAULT_BATCH_ELEMENTS) -> TrialOutcome:
    """
    Run t independent sample/compare trials, stopping after the first batch that contains a
    differing trial.

    Trial i draws from the stream `params.rng_for(*stream_key, i)`, so the outcome does not depend on
    the batch size. Each batch stacks the plain and flipped matrices of as many trials as fit into
    `batch_elements` matrix entries (at least one trial).

    Raises:
        ContractViolationError: For an odd number of vertices or an E0 edge that is not in the graph.
    """
    layout = _EdgeLayout(graph, e0)
    field = params.field
    trials = params.trials if trials is None else trials
    n = layout.n

    per_batch = max(1, batch_elements // max(1, 2 * n * n))
    last_plain = last_flipped = field.element(0)
    trials_run = 0

    for start in range(0, trials, per_batch):
        batch = range(start, min(trials, start + per_batch))
        stack = field.zeros((2 * len(batch), n, n))
        for offset, trial in enumerate(batch):
            draws = field.random_nonzero(params.rng_for(*stream_key, trial), layout.edge_count)
            layout.fill(field, draws, stack[2 * offset], stack[2 * offset + 1])

        dets = field.determinants(stack)
        trials_run += len(batch)

        for offset, trial in enumerate(batch):
            det_plain = field.element(int(dets[2 * offset]))
            det_flipped = field.element(int(dets[2 * offset + 1]))
            if det_plain != det_flipped:
                logger.debug(f"Trial {trial}: determinants differ")
                return TrialOutcome(trial, det_plain, det_flipped, trials_run)
            last_plain, last_flipped = det_plain, det_flipped

    logger.debug(f"All {trials_run} trials gave equal determinants (n = {n})")
    return TrialOutcome(None, last_plain, last_flipped, trials_run)
