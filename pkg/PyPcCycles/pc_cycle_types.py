from enum import Enum

class Answer(Enum):
    NO = 0
    YES = 1

    @classmethod
    def of(cls, value: bool) -> 'Answer':
        return cls.YES if value else cls.NO

    def __bool__(self) -> bool:
        return self is Answer.YES

class ParityClass(Enum):
    NO_PERFECT_MATCHING = 'no_perfect_matching'
    ALL_EVEN = 'all_even'
    ALL_ODD  = 'all_odd'
    BOTH_PARITIES = 'both_parities'

class DecisionBranch(Enum):
    DETERMINISTIC = 'deterministic'
    DETERMINANTS_DIFFER = 'determinants_differ'
    MATCHING_FALLBACK = 'matching_fallback'
