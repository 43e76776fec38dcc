"""
Decision procedures on edge-colored multigraphs and digraphs.

- `pc_cycle_exists`: PC cycle existence by repeated deletion of separating vertices (deterministic).
- `odd_pc_cycle_exists`: odd PC cycle existence by the randomized Tutte matrix parity test on the
  gadget graph of each component, with a perfect matching fallback (one-sided error).
- `find_odd_pc_cycle`: witness extraction by self-reduction on the decision above.
- `pc_closed_walk_exists`: PC closed walk existence by the monochromatic-vertex reduction.
- `parity_matching_decide`: E0-parities of the perfect matchings of an uncolored graph.
- `odd_dicycle_exists`: odd directed cycles via strong components and bipartiteness.
"""
import logging
from dataclasses import dataclass
from typing import *

import networkx as nx

from PyPcCycles.mylib.algebra.sz_params import SZParams, boosted_trials
from PyPcCycles.mylib.algebra.tutte_sample import DEFAULT_BATCH_ELEMENTS, TrialOutcome, run_parity_trials
from PyPcCycles.mylib.graph.gadget import GadgetGraph, build_gadget_graph, matching_to_pc_cycle_subgraph
from PyPcCycles.mylib.graph.graph_types import *
from PyPcCycles.mylib.graph.matching import Matching, Parity, maximum_matching, parity
from PyPcCycles.mylib.graph.monochromatic_reduction import reduce_monochromatic_with_trace
from PyPcCycles.mylib.graph.pc_cycle import InvalidCycleError, PcCycle, pc_cycle_subgraph_components
from PyPcCycles.pc_cycle_types import Answer, DecisionBranch, ParityClass

logger = logging.getLogger(__name__)

DEFAULT_EXTRACTION_RETRIES = 3


class RandomnessFailureError(RuntimeError):
    """Exception raised when witness extraction keeps failing validation, i.e. the random draws were unlucky."""

    def __init__(self, attempts: int):
        super().__init__(f"Witness extraction failed validation in all {attempts} attempts")
        self.attempts = attempts


#---------------------------------------------------------------------------------------------------------------------------------------------
# Evidence

@dataclass(frozen=True)
class CycleWitness:
    """ A verified PC cycle. """
    cycle: PcCycle

    def to_dict(self) -> dict:
        return {
            'kind': 'cycle',
            'length': self.cycle.length,
            'vertices': list(self.cycle.vertices),
            'colors': [edge.color for edge in self.cycle.edges],
        }

    def summary(self) -> str:
        return f"{'odd' if self.cycle.is_odd() else 'even'} PC cycle of length {self.cycle.length}: {self.cycle}"


@dataclass(frozen=True)
class DicycleWitness:
    """ A directed cycle, given by its vertices in arc order. """
    vertices: Tuple[Vertex, ...]

    def to_dict(self) -> dict:
        return {'kind': 'dicycle', 'length': len(self.vertices), 'vertices': list(self.vertices)}

    def summary(self) -> str:
        return f"dicycle of length {len(self.vertices)}: {' -> '.join(self.vertices + self.vertices[:1])}"


@dataclass(frozen=True)
class DeterminantPair:
    """
    The determinants of the plain and the flipped matrix of one trial on one component, and the
    parity of the fallback perfect matching if the fallback was reached.
    """
    component: int
    trial: Optional[int]
    det_plain: int
    det_flipped: int
    dimension: int
    matching_parity: Optional[Parity] = None

    @classmethod
    def from_outcome(cls, component: int, outcome: TrialOutcome, dimension: int,
                     matching_parity: Optional[Parity] = None) -> 'DeterminantPair':
        return cls(component, outcome.differing_trial, int(outcome.det_plain), int(outcome.det_flipped),
                   dimension, matching_parity)

    def to_dict(self) -> dict:
        return {
            'kind': 'determinants',
            'component': self.component,
            'trial': self.trial,
            'det_plain': self.det_plain,
            'det_flipped': self.det_flipped,
            'dimension': self.dimension,
            'matching_parity': self.matching_parity.name.lower() if self.matching_parity else None,
        }

    def summary(self) -> str:
        if self.trial is not None:
            return f"component {self.component}: determinants differ in trial {self.trial} ({self.det_plain} != {self.det_flipped})"
        return f"component {self.component}: all determinants equal, fallback matching is {self.matching_parity.name.lower()}"


@dataclass(frozen=True)
class MatchingWitness:
    """ A perfect matching and its E0-parity. """
    edges: Tuple[Edge, ...]
    parity: Parity

    def to_dict(self) -> dict:
        return {'kind': 'matching', 'edges': [list(edge) for edge in self.edges], 'parity': self.parity.name.lower()}

    def summary(self) -> str:
        return f"perfect matching with {len(self.edges)} edges, E0-{self.parity.name.lower()}"


@dataclass(frozen=True)
class ReductionTrace:
    """
    Vertices in deletion order. `remaining` holds the vertices left when the deletion stopped, for a
    yes answer the vertices of a component that admits no further deletion.
    """
    deleted: Tuple[Vertex, ...]
    remaining: Tuple[Vertex, ...] = ()

    def to_dict(self) -> dict:
        return {'kind': 'reduction', 'deleted': list(self.deleted), 'remaining': list(self.remaining)}

    def summary(self) -> str:
        text = f"{len(self.deleted)} vertices deleted"
        if self.remaining:
            text += f", stopped at {{{', '.join(self.remaining)}}}"
        return text


Evidence = Union[CycleWitness, DicycleWitness, DeterminantPair, MatchingWitness, ReductionTrace]


@dataclass(frozen=True)
class Decision:
    """
    The answer of a decision procedure.

    Attributes:
        answer: Answer.YES / Answer.NO, or a ParityClass for parity_matching_decide.
        evidence: What the answer rests on.
        params: The randomness parameters used, with the seed resolved (None for deterministic procedures).
        error_bound: Upper bound on the probability that the answer is wrong (0 for yes answers of
            one-sided tests and for deterministic procedures).
        branch: Which part of the procedure produced the answer.
    """
    answer: Union[Answer, ParityClass]
    evidence: Tuple[Evidence, ...] = ()
    params: Optional[SZParams] = None
    error_bound: float = 0.0
    branch: DecisionBranch = DecisionBranch.DETERMINISTIC

    @property
    def witness(self) -> Optional[PcCycle]:
        return next((e.cycle for e in self.evidence if isinstance(e, CycleWitness)), None)

    def to_dict(self) -> dict:
        return {
            'answer': self.answer.name.lower(),
            'evidence': [e.to_dict() for e in self.evidence],
            'params': self.params.to_dict() if self.params is not None else None,
            'error_bound': self.error_bound,
            'branch': self.branch.value,
        }


#---------------------------------------------------------------------------------------------------------------------------------------------
# PC cycles and closed walks

def _separating_vertex(component: EdgeColoredMultigraph) -> Optional[Vertex]:
    """
    Return the first vertex z such that every component of `component` - z is joined to z by
    edges of a single color, or None.
    """
    for z in component.vertices:
        rest = component.induced_subgraph(v for v in component.vertices if v != z)
        label = {}
        for index, part in enumerate(nx.connected_components(rest.to_networkx())):
            label.update(dict.fromkeys(part, index))

        colors_per_part: Dict[int, Set[Color]] = {}
        for edge in component.incident_edges(z):
            colors_per_part.setdefault(label[edge.other(z)], set()).add(edge.color)

        if all(len(colors) == 1 for colors in colors_per_part.values()):
            return z
    return None


def pc_cycle_exists(graph: EdgeColoredMultigraph) -> Decision:
    """
    Decide whether `graph` has a PC cycle.

    A graph has no PC cycle iff it can be taken apart by repeatedly deleting a vertex z such that
    no component of G - z is joined to z by edges of more than one color. Components of a single
    vertex are discarded.
    """
    current = graph
    deleted: List[Vertex] = []

    while True:
        components = [c for c in current.connected_components() if len(c) >= 2]
        if not components:
            logger.debug(f"No PC cycle: deleted {len(deleted)} separating vertices")
            return Decision(Answer.NO, (ReductionTrace(tuple(deleted)),))

        component = components[0]
        z = _separating_vertex(component)
        if z is None:
            logger.debug(f"PC cycle exists: component of {len(component)} vertices has no separating vertex")
            return Decision(Answer.YES, (ReductionTrace(tuple(deleted), component.vertices),))

        deleted.append(z)
        current = current.induced_subgraph(v for v in current.vertices if v != z)


def pc_closed_walk_exists(graph: EdgeColoredMultigraph) -> Decision:
    """ Decide whether `graph` has a PC closed walk: exactly when the monochromatic reduction leaves a vertex. """
    reduced, deleted = reduce_monochromatic_with_trace(graph)
    return Decision(Answer.of(not reduced.is_empty()), (ReductionTrace(tuple(deleted), reduced.vertices),))


#---------------------------------------------------------------------------------------------------------------------------------------------
# Odd PC cycles

def _odd_cycle_from_matching(component: EdgeColoredMultigraph, gadget: GadgetGraph, matching: Matching) -> PcCycle:
    edges = matching_to_pc_cycle_subgraph(gadget, matching)
    cycles = pc_cycle_subgraph_components(edges)
    odd = next(cycle for cycle in cycles if cycle.is_odd())
    if not odd.lies_in(component):
        raise InvalidCycleError("The translated cycle is not part of the graph")
    return odd


def odd_pc_cycle_exists(graph: EdgeColoredMultigraph, params: SZParams,
                        batch_elements: int = DEFAULT_BATCH_ELEMENTS,
                        stream_prefix: Sequence[int] = ()) -> Decision:
    """
    Decide whether `graph` has an odd PC cycle.

    For each component of the monochromatic reduction G', the gadget graph G* is built and t
    trials compare det(A) with det(A flipped on E2). A difference proves perfect matchings of both
    E2-parities, hence an odd PC cycle subgraph, hence an odd PC cycle. If all trials agree, the
    E2-parity of one perfect matching of G* decides. A yes answer is always correct; a no answer is
    wrong with probability at most `error_bound`.

    Args:
        graph: The edge-colored multigraph.
        params: Prime, trial count and seed. A None seed is resolved and reported in the decision.
        batch_elements: Upper bound on the matrix entries eliminated together.
        stream_prefix: Prepended to the (component, trial) stream keys.

    Raises:
        ParamsError: If the parameters are invalid, or the prime does not exceed 4 times the dimension
            of a gadget graph.
    """
    params = params.resolved().validate()
    reduced, deleted = reduce_monochromatic_with_trace(graph)
    if reduced.is_empty():
        return Decision(Answer.NO, (ReductionTrace(tuple(deleted)),), params)

    evidence: List[Evidence] = []
    error_bound = 0.0

    for index, component in enumerate(reduced.connected_components()):
        gadget = build_gadget_graph(component)
        dimension = len(gadget.graph)
        params.check_dimension(dimension)
        outcome = run_parity_trials(gadget.graph, gadget.e2_edges, params, stream_key=(*stream_prefix, index),
                                    batch_elements=batch_elements)
        if outcome.differ:
            return Decision(Answer.YES, (DeterminantPair.from_outcome(index, outcome, dimension),), params, 0.0,
                            DecisionBranch.DETERMINANTS_DIFFER)

        matching = maximum_matching(gadget.graph)
        if not matching.is_perfect(gadget.graph):
            raise ContractViolationError("The gadget graph has no perfect matching")

        matching_parity = parity(matching, gadget.e2_edges)
        pair = DeterminantPair.from_outcome(index, outcome, dimension, matching_parity)
        if matching_parity is Parity.ODD:
            logger.info(f"Component {index}: determinants agree but the fallback matching is E2-odd")
            cycle = _odd_cycle_from_matching(component, gadget, matching)
            return Decision(Answer.YES, (pair, CycleWitness(cycle)), params, 0.0, DecisionBranch.MATCHING_FALLBACK)

        evidence.append(pair)
        error_bound += params.error_bound(dimension)

    return Decision(Answer.NO, tuple(evidence), params, min(1.0, error_bound), DecisionBranch.MATCHING_FALLBACK)


def find_odd_pc_cycle_decision(graph: EdgeColoredMultigraph, params: SZParams,
                               max_retries: int = DEFAULT_EXTRACTION_RETRIES,
                               batch_elements: int = DEFAULT_BATCH_ELEMENTS) -> Decision:
    """
    Decide whether `graph` has an odd PC cycle and, if so, return one as a CycleWitness.

    The edges of G' are visited in order; an edge stays deleted if the graph without it still has
    an odd PC cycle, using t + ceil(log4 |E|) trials per call. Without a false negative the
    remaining edges are exactly one odd PC cycle. The remainder is validated, and a failed
    validation restarts the deletion with fresh random streams.

    Raises:
        RandomnessFailureError: If all `max_retries` attempts fail validation.
        ParamsError: If the parameters are invalid.
    """
    params = params.resolved().validate()
    decision = odd_pc_cycle_exists(graph, params, batch_elements)
    if not decision.answer or decision.witness is not None:
        return decision

    reduced, _ = reduce_monochromatic_with_trace(graph)
    edges = list(reduced.edges)
    call_params = params.replace(trials=boosted_trials(params.trials, len(edges)))

    for attempt in range(1, max_retries + 1):
        current = reduced
        for call, edge in enumerate(edges):
            candidate = current.without_edge(edge)
            result = odd_pc_cycle_exists(candidate, call_params, batch_elements, stream_prefix=(attempt, call))
            if result.witness is not None:
                logger.debug(f"Extraction attempt {attempt}: fallback witness after {call + 1} calls")
                return Decision(Answer.YES, (CycleWitness(result.witness),), params, 0.0, result.branch)
            if result.answer:
                current = candidate

        try:
            cycle = PcCycle.from_edge_set(current.edges)
            if cycle.is_odd() and cycle.lies_in(graph):
                return Decision(Answer.YES, (CycleWitness(cycle),), params, 0.0, DecisionBranch.DETERMINANTS_DIFFER)
            logger.info(f"Extraction attempt {attempt} ended with an even cycle, retrying")
        except InvalidCycleError as e:
            logger.info(f"Extraction attempt {attempt} left {len(current.edges)} edges that are not one PC cycle ({e}), retrying")

    logger.warning(f"Witness extraction failed in all {max_retries} attempts")
    raise RandomnessFailureError(max_retries)


def find_odd_pc_cycle(graph: EdgeColoredMultigraph, params: SZParams,
                      max_retries: int = DEFAULT_EXTRACTION_RETRIES,
                      batch_elements: int = DEFAULT_BATCH_ELEMENTS) -> Optional[PcCycle]:
    """
    Return an odd PC cycle of `graph`, or None if the decision says there is none.

    Raises:
        RandomnessFailureError: If all `max_retries` attempts fail validation.
    """
    return find_odd_pc_cycle_decision(graph, params, max_retries, batch_elements).witness


#---------------------------------------------------------------------------------------------------------------------------------------------
# Perfect matching parity

def parity_matching_decide(graph: UncoloredGraph, e0: Iterable[Edge], params: SZParams,
                           batch_elements: int = DEFAULT_BATCH_ELEMENTS) -> Decision:
    """
    Classify the perfect matchings of `graph` by the parity of their intersection with E0.

    BOTH_PARITIES is always correct. ALL_EVEN / ALL_ODD is the parity of one concrete perfect
    matching and is wrong with probability at most `error_bound`.

    Raises:
        ContractViolationError: If an E0 edge is not an edge of the graph.
        ParamsError: If the parameters are invalid, or the prime does not exceed 4 times the vertex count.
    """
    params = params.resolved().validate().check_dimension(len(graph))
    e0_edges = graph.normalize_edges(e0)

    if len(graph) % 2:
        return Decision(ParityClass.NO_PERFECT_MATCHING, (), params)

    matching = maximum_matching(graph)
    if not matching.is_perfect(graph):
        return Decision(ParityClass.NO_PERFECT_MATCHING, (), params)

    witness = MatchingWitness(tuple(sorted(matching.edges, key=lambda e: (graph.position(e[0]), graph.position(e[1])))),
                              parity(matching, e0_edges))

    outcome = run_parity_trials(graph, e0_edges, params, stream_key=(0,), batch_elements=batch_elements)
    pair = DeterminantPair.from_outcome(0, outcome, len(graph), None if outcome.differ else witness.parity)
    if outcome.differ:
        return Decision(ParityClass.BOTH_PARITIES, (pair, witness), params, 0.0, DecisionBranch.DETERMINANTS_DIFFER)

    answer = ParityClass.ALL_ODD if witness.parity is Parity.ODD else ParityClass.ALL_EVEN
    return Decision(answer, (pair, witness), params, params.error_bound(len(graph)), DecisionBranch.MATCHING_FALLBACK)


#---------------------------------------------------------------------------------------------------------------------------------------------
# Digraphs

def _odd_dicycle_in(component: nx.DiGraph, root: Vertex) -> Tuple[Vertex, ...]:
    """
    Find an odd dicycle in a strongly connected digraph whose underlying graph is not bipartite.

    With BFS distances d from `root` some arc uv has d(u) + 1 - d(v) odd, so of the closed walks
    root..u v..root and root..v..root exactly one is odd. An odd closed walk splits into dicycles,
    at least one of them odd.
    """
    distance = nx.single_source_shortest_path_length(component, root)
    u, v = next((u, v) for u, v in component.edges if (distance[u] + 1 - distance[v]) % 2)

    back = nx.shortest_path(component, v, root)
    walk_through_arc = nx.shortest_path(component, root, u) + back
    walk_direct = nx.shortest_path(component, root, v)[:-1] + back
    walk = walk_through_arc if (len(walk_through_arc) - 1) % 2 else walk_direct

    stack: List[Vertex] = []
    position: Dict[Vertex, int] = {}
    for vertex in walk:
        if vertex in position:
            start = position[vertex]
            cycle = stack[start:]
            if len(cycle) % 2:
                return tuple(cycle)
            for removed in stack[start + 1:]:
                del position[removed]
            del stack[start + 1:]
        else:
            position[vertex] = len(stack)
            stack.append(vertex)

    raise ContractViolationError("The closed walk has no odd dicycle")


def odd_dicycle_exists(digraph: Digraph) -> Decision:
    """
    Decide whether `digraph` has an odd directed cycle: exactly when some strong component is not
    bipartite as an undirected graph. A yes answer carries an odd dicycle.
    """
    graph = digraph.to_networkx()
    order = {vertex: i for i, vertex in enumerate(digraph.vertices)}

    for part in sorted(nx.strongly_connected_components(graph), key=lambda c: min(order[v] for v in c)):
        if len(part) < 2:
            continue
        component = graph.subgraph(part)
        if not nx.is_bipartite(component.to_undirected()):
            root = min(part, key=order.get)
            cycle = _odd_dicycle_in(component, root)
            logger.debug(f"Odd dicycle of length {len(cycle)} in a strong component of {len(part)} vertices")
            return Decision(Answer.YES, (DicycleWitness(cycle),))

    return Decision(Answer.NO)


def digraph_to_edge_colored(digraph: Digraph) -> EdgeColoredMultigraph:
    """
    Replace every arc uv by a path u x_uv v whose edges have colors 1 and 2. Dicycles of D map to
    PC cycles of twice the length and vice versa.
    """
    names = set(digraph.vertices)
    vertices = list(digraph.vertices)
    edges = []
    for u, v in digraph.arcs:
        middle = f"x_{u}_{v}"
        while middle in names:
            middle += "_"
        names.add(middle)
        vertices.append(middle)
        edges += [ColoredEdge(u, middle, 1), ColoredEdge(middle, v, 2)]
    return EdgeColoredMultigraph(tuple(vertices), tuple(edges))
