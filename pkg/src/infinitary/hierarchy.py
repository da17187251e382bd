"""
Bounding hierarchies consulted by the reduction walker

FastGrowing wraps the budgeted F_a evaluator. Surrogate is the smaller
hierarchy G_0(n) = n + 1, G_(b+1)(n) = G_b(G_b(n)) + 1,
G_lam(n) = G_{lam}(n)(n) + 1, whose values at micro ordinals can be written
out exactly.
"""

from dataclasses import dataclass
from math import inf
from typing import Iterable, Optional, Union
import logging
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import SURROGATE_MAX_BITS, WITNESS_SEARCH_LIMIT
from ordinals import Ordinal, predecessor, fund_seq, format_ordinal
from fgh import EvalBudget, Converged, DivergedValue, fgh_eval
from infinitary.formulas import Formula, k_of, sequent_threshold, has_search, is_sigma_n

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Yes:
    value: Optional[int] = None


@dataclass(frozen=True)
class No:
    value: Optional[int] = None


@dataclass(frozen=True)
class Undecided:
    budget: int


Decision = Union[Yes, No, Undecided]


class FastGrowing:
    name = 'F'

    def __init__(self, budget: EvalBudget = None):
        self.budget = budget or EvalBudget.from_profile()

    def evaluate(self, a: Ordinal, n: int) -> Optional[int]:
        outcome = fgh_eval(a, n, self.budget)
        return outcome.value if isinstance(outcome, Converged) else None

    def at_least(self, a: Ordinal, n: int, threshold: int) -> Decision:
        """Decide F_a(n) >= threshold, stopping once the threshold is passed"""
        if threshold <= n + 1:
            return Yes()
        outcome = fgh_eval(a, n, EvalBudget(self.budget.max_steps, threshold - 1))
        if isinstance(outcome, Converged):
            return Yes(outcome.value) if outcome.value >= threshold else No(outcome.value)
        if isinstance(outcome, DivergedValue):
            return Yes()
        logger.debug("F_%s(%d) >= %d undecided after %d steps",
                     format_ordinal(a), n, threshold, outcome.steps_used)
        return Undecided(self.budget.max_steps)


class _Overflow(Exception):
    pass


class _OutOfSteps(Exception):
    pass


class Surrogate:
    """
    G hierarchy with exact big-integer values

    Finite indices use the closed form G_m(n) = n + 2^(m+1) - 1, which the
    successor clause yields by induction on m.
    """
    name = 'G'

    def __init__(self, max_bits: int = SURROGATE_MAX_BITS, max_steps: int = 100_000):
        self.max_bits = max_bits
        self.max_steps = max_steps

    def _g(self, a: Ordinal, n: int, cap: int, counter: list) -> int:
        counter[0] += 1
        if counter[0] > self.max_steps:
            raise _OutOfSteps()
        if a.is_finite:
            m = a.as_int()
            if m + 1 > cap.bit_length():
                raise _Overflow()
            value = n + (1 << (m + 1)) - 1
        elif a.is_successor:
            b = predecessor(a)
            value = self._g(b, self._g(b, n, cap, counter), cap, counter) + 1
        else:
            value = self._g(fund_seq(a, n), n, cap, counter) + 1
        if value > cap:
            raise _Overflow()
        return value

    def evaluate(self, a: Ordinal, n: int) -> Optional[int]:
        try:
            return self._g(a, n, 1 << self.max_bits, [0])
        except (_Overflow, _OutOfSteps):
            return None

    def iterate(self, a: Ordinal, n: int, times: int) -> Optional[int]:
        value = n
        for _ in range(times):
            value = self.evaluate(a, value)
            if value is None:
                return None
        return value

    def at_least(self, a: Ordinal, n: int, threshold: int) -> Decision:
        if threshold <= n + 1:
            return Yes()
        try:
            value = self._g(a, n, threshold - 1, [0])
        except _Overflow:
            return Yes()
        except _OutOfSteps:
            return Undecided(self.max_steps)
        return Yes(value) if value >= threshold else No(value)


Hierarchy = Union[FastGrowing, Surrogate]


def bounded_by(gamma: Iterable[Formula], hierarchy: Hierarchy, a: Ordinal,
               limit: int = WITNESS_SEARCH_LIMIT) -> Decision:
    """
    Is the sequent true in H_a(k(gamma))?

    Args:
        gamma: Sigma^N sequent
        hierarchy: FastGrowing or Surrogate
        a: index of the bounding function
        limit: largest witness searched

    Returns:
        Yes, No or Undecided when the budget or the witness horizon runs out
    """
    gamma = frozenset(gamma)
    k = k_of(gamma)
    threshold = sequent_threshold(gamma, limit)
    if threshold != inf:
        return hierarchy.at_least(a, k, threshold)
    if not any(has_search(f) for f in gamma if is_sigma_n(f)):
        return No()
    horizon = hierarchy.at_least(a, k, 3 * limit + 4)
    if isinstance(horizon, No):
        return No(horizon.value)
    return Undecided(limit)
