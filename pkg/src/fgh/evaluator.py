"""
Budgeted evaluation of the fast-growing hierarchy

F_0(n) = n + 1, F_(a+1)(n) = F_a^(n+1)(n), F_lambda(n) = F_{lambda}(n)(n).
Iterates are applied innermost-first with an explicit stack, so arbitrarily
deep unfoldings never touch the Python recursion limit.
"""

from dataclasses import dataclass
from typing import Optional, Union
import logging
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import BUDGET_PROFILES, active_profile_name
from ordinals import Ordinal, EPSILON_ZERO, ONE, predecessor, fund_seq, omega_tower

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EvalBudget:
    max_steps: int
    max_value: int

    def __post_init__(self):
        if self.max_steps <= 0 or self.max_value <= 0:
            raise ValueError("budget limits must be positive")

    @classmethod
    def from_profile(cls, name: str = None) -> 'EvalBudget':
        profile = BUDGET_PROFILES[name or active_profile_name()]
        return cls(profile['max_steps'], profile['max_value'])


@dataclass(frozen=True)
class Converged:
    value: int
    steps_used: int


@dataclass(frozen=True)
class DivergedSteps:
    steps_used: int


@dataclass(frozen=True)
class DivergedValue:
    steps_used: int


EvalOutcome = Union[Converged, DivergedSteps, DivergedValue]


@dataclass(frozen=True)
class LeqYes:
    value: int


@dataclass(frozen=True)
class LeqNo:
    pass


def _evaluate(a: Ordinal, n: int, times: int,
              max_steps: Optional[int], max_value: Optional[int]) -> EvalOutcome:
    # Each stack entry means "apply F_ordinal `count` more times to value".
    # A run of the zero clause F_0^r(v) = v + r counts as a single step.
    value = n
    steps = 0
    stack = [(a, times)] if times > 0 else []
    while stack:
        ordinal, count = stack.pop()
        if max_steps is not None and steps >= max_steps:
            return DivergedSteps(steps)
        steps += 1
        if ordinal.is_zero:
            value += count
        else:
            if count > 1:
                stack.append((ordinal, count - 1))
            if ordinal.is_successor:
                stack.append((predecessor(ordinal), value + 1))
            else:
                stack.append((fund_seq(ordinal, value), 1))
        if max_value is not None and value > max_value:
            return DivergedValue(steps)
    return Converged(value, steps)


def fgh_eval(a: Ordinal, n: int, b: EvalBudget) -> EvalOutcome:
    """
    Evaluate F_a(n) under a budget

    Args:
        a: index, at most eps0
        n: argument
        b: step and magnitude limits

    Returns:
        Converged(value), DivergedSteps or DivergedValue
    """
    return _evaluate(a, n, 1, b.max_steps, b.max_value)


def hierarchy_iterate(a: Ordinal, n: int, times: int, b: EvalBudget) -> EvalOutcome:
    """F_a applied `times` times starting at n, sharing one budget"""
    return _evaluate(a, n, times, b.max_steps, b.max_value)


def fgh_leq(a: Ordinal, n: int, bound: int) -> Union[LeqYes, LeqNo]:
    """
    Decide F_a(n) <= bound by cutoff evaluation

    Aborting once an intermediate value exceeds bound is sound because
    F_b(m) > m for every index b and argument m.
    """
    outcome = _evaluate(a, n, 1, None, bound)
    if isinstance(outcome, Converged):
        return LeqYes(outcome.value)
    return LeqNo()


def feps_eval(n: int, b: EvalBudget) -> EvalOutcome:
    return fgh_eval(EPSILON_ZERO, n, b)


def feps_inverse(x: int) -> int:
    """max({z <= x | F_eps0(z) <= x} u {0}), searched upward from z = 0"""
    best = 0
    z = 0
    while z <= x:
        if not isinstance(fgh_leq(EPSILON_ZERO, z, x), LeqYes):
            break
        best = z
        z += 1
    return best


def feps_star(x: int, b: EvalBudget) -> EvalOutcome:
    """F*_eps0(x) = F_(omega_y)(x) with y = feps_inverse(x)"""
    y = feps_inverse(x)
    logger.debug("feps_star(%d): inverse %d", x, y)
    return fgh_eval(omega_tower(ONE, y), x, b)


def outcome_to_dict(outcome: EvalOutcome) -> dict:
    """JSON-ready view of an evaluation outcome"""
    result = {'outcome': type(outcome).__name__, 'steps_used': outcome.steps_used}
    if isinstance(outcome, Converged):
        result['value'] = outcome.value
    return result
