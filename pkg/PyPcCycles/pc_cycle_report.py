import hashlib
from dataclasses import dataclass, field
from typing import *

from PyPcCycles.mylib.algebra.sz_params import SZParams
from PyPcCycles.mylib.config.json_file_storage import dump_json
from PyPcCycles.pc_cycle_detect import Decision

WALL_TIME_KEY = 'wall_time'


def input_digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


@dataclass
class RunReport:
    """
    The outcome of one CLI command. Equal input, seed and flags give an equal report except for
    the wall time.
    """
    command: str
    input_digest: str
    answer: str
    params: SZParams
    evidence: List[dict] = field(default_factory=list)
    evidence_summary: List[str] = field(default_factory=list)
    error_bound: float = 0.0
    wall_time: float = 0.0
    oracle_answer: Optional[str] = None
    details: Dict[str, Any] = field(default_factory=dict)
    # the text form shows the parameters only for answers that drew random numbers
    randomized: bool = True

    @classmethod
    def from_decision(cls, command: str, data: bytes, decision: Decision, params: SZParams) -> 'RunReport':
        """ Build a report from a decision. `params` is reported when the decision is deterministic. """
        return cls(
            randomized=decision.params is not None,
            command=command,
            input_digest=input_digest(data),
            answer=decision.answer.name.lower(),
            params=decision.params if decision.params is not None else params,
            evidence=[e.to_dict() for e in decision.evidence],
            evidence_summary=[e.summary() for e in decision.evidence],
            error_bound=decision.error_bound,
            details={'branch': decision.branch.value})

    def to_dict(self) -> Dict[str, Any]:
        result = {
            'command': self.command,
            'input_digest': self.input_digest,
            'answer': self.answer,
            'evidence': self.evidence,
            'params': {'prime': self.params.prime, 'trials': self.params.trials, 'seed': self.params.seed},
            'error_bound': self.error_bound,
            WALL_TIME_KEY: self.wall_time,
        }
        if self.oracle_answer is not None:
            result['oracle_answer'] = self.oracle_answer
        result.update(self.details)
        return result

    def to_json(self) -> str:
        return dump_json(self.to_dict()) + '\n'

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.answer}"]
        lines += [f"  {summary}" for summary in self.evidence_summary]
        if self.oracle_answer is not None:
            lines.append(f"  brute force: {self.oracle_answer}")
        if self.error_bound:
            lines.append(f"  error bound: {self.error_bound:.3g}")
        if self.randomized:
            lines.append(f"  prime {self.params.prime}, {self.params.trials} trials, seed {self.params.seed}")
        return '\n'.join(lines) + '\n'
