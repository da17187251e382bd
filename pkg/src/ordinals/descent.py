"""
Step-down relation: a <_k b iff a is reached from b by repeatedly taking the
k-th member of fundamental sequences.

Paths are stored as waypoints. Two consecutive waypoints u, w are either one
fundamental-sequence step (w = {u}(k)) or a tail skip (u = w + t in CNF with
t > 0); every k-path from w + t runs through w, so a skip loses no information.
"""

from dataclasses import dataclass
from typing import Optional, Tuple, Union
import logging

from ordinals.notation import (
    Ordinal, OrdinalError, ZERO, _cmp, add, fund_seq, format_ordinal,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DescentPath:
    k: int
    steps: Tuple[Ordinal, ...]

    def is_trivial(self) -> bool:
        return len(self.steps) == 1

    def expand(self, limit: int = 100_000) -> Tuple[Ordinal, ...]:
        """
        Single-step path between the first and last waypoint

        Args:
            limit: maximal number of fundamental-sequence steps

        Returns:
            tuple where each entry is fund_seq of the previous one
        """
        out = [self.steps[0]]
        for target in self.steps[1:]:
            cur = out[-1]
            while cur != target:
                if len(out) > limit:
                    raise OrdinalError(f"path longer than {limit} steps")
                cur = fund_seq(cur, self.k)
                if _cmp(cur, target) < 0:
                    raise OrdinalError(
                        f"waypoint {format_ordinal(target)} not on the {self.k}-path")
                out.append(cur)
        return tuple(out)


@dataclass(frozen=True)
class Reached:
    path: DescentPath


@dataclass(frozen=True)
class NotOnPath:
    last: Ordinal


@dataclass(frozen=True)
class BudgetExhausted:
    steps_used: int


StepDownOutcome = Union[Reached, NotOnPath, BudgetExhausted]


def tail_of(prev: Ordinal, nxt: Ordinal) -> Optional[Ordinal]:
    """t > 0 with prev = nxt + t as a CNF concatenation, or None"""
    if prev.eps0 or nxt.eps0 or _cmp(nxt, prev) >= 0:
        return None
    n = len(nxt.terms)
    if n == 0:
        return prev
    if len(prev.terms) < n or prev.terms[:n - 1] != nxt.terms[:n - 1]:
        return None
    (pe, pc), (ne, nc) = prev.terms[n - 1], nxt.terms[n - 1]
    if pe != ne or pc < nc:
        return None
    rest = (((pe, pc - nc),) if pc > nc else ()) + prev.terms[n:]
    return Ordinal(rest) if rest else None


def _split(cur: Ordinal, target: Ordinal):
    """Common prefix P with cur = P + x, target = P + y, lead(y) < lead(x)"""
    prefix = []
    for i, ((ec, cc), (et, ct)) in enumerate(zip(cur.terms, target.terms)):
        if (ec, cc) == (et, ct):
            prefix.append((ec, cc))
            continue
        if ec == et:
            prefix.append((ec, ct))
            return (Ordinal(tuple(prefix)), ((ec, cc - ct),) + cur.terms[i + 1:],
                    target.terms[i + 1:])
        return Ordinal(tuple(prefix)), cur.terms[i:], target.terms[i:]
    n = len(target.terms)
    return Ordinal(tuple(prefix)), cur.terms[n:], ()


def _next_waypoint(cur: Ordinal, target: Ordinal, k: int) -> Ordinal:
    if cur.eps0:
        return fund_seq(cur, k)
    prefix, x, y = _split(cur, target)
    if not y:
        return prefix
    (e, c), rest = x[0], x[1:]
    if rest:
        return add(prefix, Ordinal(((e, c),)))
    if c > 1:
        return add(prefix, Ordinal(((e, c - 1),)))
    return fund_seq(cur, k)


def step_down(b: Ordinal, a: Ordinal, k: int, step_budget: int) -> StepDownOutcome:
    """
    Descend from b towards a along k-th fundamental-sequence members

    The budget counts waypoints, not fund_seq applications: a tail skip that
    drops a whole run of finite steps (w + 5 to w) costs one unit.
    DescentPath.expand() recovers the single steps.

    Args:
        b: start ordinal
        a: target ordinal, a <= b
        k: fundamental-sequence index
        step_budget: maximal number of waypoints (tail skips included)

    Returns:
        Reached(path), NotOnPath(first ordinal below a or 0) or BudgetExhausted
    """
    if _cmp(a, b) > 0:
        raise OrdinalError(
            f"step_down needs {format_ordinal(a)} <= {format_ordinal(b)}")

    steps = [b]
    cur = b
    used = 0
    while True:
        if cur == a:
            return Reached(DescentPath(k, tuple(steps)))
        if _cmp(cur, a) < 0 or cur == ZERO:
            return NotOnPath(cur)
        if used >= step_budget:
            logger.debug("step_down budget %d exhausted at %s", step_budget, format_ordinal(cur))
            return BudgetExhausted(used)
        cur = _next_waypoint(cur, a, k)
        steps.append(cur)
        used += 1


def strictly_below(a: Ordinal, b: Ordinal, k: int, step_budget: int) -> Optional[bool]:
    """a <_k b (irreflexive); None when the budget runs out"""
    if _cmp(a, b) >= 0:
        return False
    outcome = step_down(b, a, k, step_budget)
    if isinstance(outcome, BudgetExhausted):
        return None
    return isinstance(outcome, Reached)


def reached_or_equal(a: Ordinal, b: Ordinal, k: int, step_budget: int) -> Optional[bool]:
    """a = b or a <_k b"""
    if a == b:
        return True
    return strictly_below(a, b, k, step_budget)
