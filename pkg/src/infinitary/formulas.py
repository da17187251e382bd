"""
Sigma^N formulas, sequents and truth in K

N is read as {m | 3m < K}. Every quantifier is relativized to N, so truth in
K is decided by bounded search. Side formulas m notin N sit at the top level
of a sequent and never make it true.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import inf
from typing import FrozenSet, Iterable, Tuple, Union
import logging
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import WITNESS_SEARCH_LIMIT
from fgh import EvalBudget, Converged, feps_star

logger = logging.getLogger(__name__)


class TermEvaluationError(ValueError):
    """A term has free variables or could not be evaluated under the budget"""


# ============================================================================
# TERMS
# ============================================================================

@dataclass(frozen=True)
class NNum:
    value: int


@dataclass(frozen=True)
class NVar:
    name: str


ARITY = {'S': 1, '+': 2, '*': 2, 'feps*': 1}


@dataclass(frozen=True)
class NApp:
    op: str
    args: Tuple['NTerm', ...]

    def __post_init__(self):
        if ARITY.get(self.op) != len(self.args):
            raise ValueError(f"bad application of {self.op!r} to {len(self.args)} arguments")


NTerm = Union[NNum, NVar, NApp]


def num(n: int) -> NNum:
    if n < 0:
        raise ValueError("numerals are non-negative")
    return NNum(n)


@lru_cache(maxsize=1024)
def _feps_star_value(x: int, budget: EvalBudget) -> int:
    outcome = feps_star(x, budget)
    if not isinstance(outcome, Converged):
        raise TermEvaluationError(f"feps*({x}) did not converge: {type(outcome).__name__}")
    return outcome.value


def eval_term(t: NTerm, budget: EvalBudget = None) -> int:
    if isinstance(t, NNum):
        return t.value
    if isinstance(t, NVar):
        raise TermEvaluationError(f"free variable {t.name}")
    values = [eval_term(a, budget) for a in t.args]
    if t.op == 'S':
        return values[0] + 1
    if t.op == '+':
        return values[0] + values[1]
    if t.op == '*':
        return values[0] * values[1]
    return _feps_star_value(values[0], budget or EvalBudget.from_profile())


# ============================================================================
# FORMULAS
# ============================================================================

NEGATED_RELATION = {'=': '!=', '!=': '=', '<': '>=', '>=': '<'}


@dataclass(frozen=True)
class Prime:
    """Elementary relation between closed terms"""
    rel: str
    left: NTerm
    right: NTerm

    def __post_init__(self):
        if self.rel not in NEGATED_RELATION:
            raise ValueError(f"unknown relation {self.rel!r}")


@dataclass(frozen=True)
class Mem:
    term: NTerm


@dataclass(frozen=True)
class NotMem:
    term: NTerm


@dataclass(frozen=True)
class And:
    left: 'Formula'
    right: 'Formula'


@dataclass(frozen=True)
class Or:
    left: 'Formula'
    right: 'Formula'


@dataclass(frozen=True)
class ExN:
    """ex y in N body, short for ex y (y in N /\\ body)"""
    var: NVar
    body: 'Formula'


@dataclass(frozen=True)
class AllN:
    """all y in N body, short for all y (y notin N \\/ body)"""
    var: NVar
    body: 'Formula'


Formula = Union[Prime, Mem, NotMem, And, Or, ExN, AllN]
Sequent = FrozenSet[Formula]


def mem(n: int) -> Mem:
    return Mem(num(n))


def not_mem(n: int) -> NotMem:
    return NotMem(num(n))


def negate_prime(p: Prime) -> Prime:
    return Prime(NEGATED_RELATION[p.rel], p.left, p.right)


def subst_term(t: NTerm, name: str, value: NTerm) -> NTerm:
    if isinstance(t, NVar):
        return value if t.name == name else t
    if isinstance(t, NApp):
        return NApp(t.op, tuple(subst_term(a, name, value) for a in t.args))
    return t


def subst(phi: Formula, name: str, value: NTerm) -> Formula:
    """Replace free occurrences of the variable `name`"""
    if isinstance(phi, Prime):
        return Prime(phi.rel, subst_term(phi.left, name, value), subst_term(phi.right, name, value))
    if isinstance(phi, (Mem, NotMem)):
        return type(phi)(subst_term(phi.term, name, value))
    if isinstance(phi, (And, Or)):
        return type(phi)(subst(phi.left, name, value), subst(phi.right, name, value))
    if phi.var.name == name:
        return phi
    return type(phi)(phi.var, subst(phi.body, name, value))


def instance(q: Union[ExN, AllN], m: Union[int, NTerm]) -> Formula:
    """
    Premise formula of the rule for a relativized quantifier

    ex y in N A gives (m in N /\\ A(m)); all y in N A gives (m notin N \\/ A(m)).
    """
    t = num(m) if isinstance(m, int) else m
    body = subst(q.body, q.var.name, t)
    if isinstance(q, ExN):
        return And(Mem(t), body)
    return Or(NotMem(t), body)


def dual(e: ExN) -> AllN:
    """all y in N ~R(y) for a prime body R"""
    if not isinstance(e.body, Prime):
        raise ValueError("dual needs an existential over a prime formula")
    return AllN(e.var, negate_prime(e.body))


def feps_star_eq(m: Union[int, NTerm], y: Union[int, NTerm]) -> Prime:
    left = NApp('feps*', (num(m) if isinstance(m, int) else m,))
    return Prime('=', left, num(y) if isinstance(y, int) else y)


def feps_star_total(m: Union[int, NTerm]) -> ExN:
    """ex y in N feps*(m) = y"""
    y = NVar('y')
    return ExN(y, feps_star_eq(m, y))


# ============================================================================
# TRUTH
# ============================================================================

def prime_holds(p: Prime, budget: EvalBudget = None) -> bool:
    left, right = eval_term(p.left, budget), eval_term(p.right, budget)
    if p.rel == '=':
        return left == right
    if p.rel == '!=':
        return left != right
    if p.rel == '<':
        return left < right
    return left >= right


def truth_in_K(phi: Formula, K: int, budget: EvalBudget = None) -> bool:
    """
    Truth of a closed formula under N = {m | 3m < K}

    Quantifiers range over the m with 3m < K, so the search is exact.
    """
    if isinstance(phi, Prime):
        return prime_holds(phi, budget)
    if isinstance(phi, Mem):
        return 3 * eval_term(phi.term, budget) < K
    if isinstance(phi, NotMem):
        return 3 * eval_term(phi.term, budget) >= K
    if isinstance(phi, And):
        return truth_in_K(phi.left, K, budget) and truth_in_K(phi.right, K, budget)
    if isinstance(phi, Or):
        return truth_in_K(phi.left, K, budget) or truth_in_K(phi.right, K, budget)
    bound = (K + 2) // 3
    bodies = (truth_in_K(subst(phi.body, phi.var.name, num(m)), K, budget) for m in range(bound))
    if isinstance(phi, ExN):
        return any(bodies)
    return all(bodies)


def is_sigma_n(phi: Formula) -> bool:
    if isinstance(phi, (Prime, Mem)):
        return True
    if isinstance(phi, (And, Or)):
        return is_sigma_n(phi.left) and is_sigma_n(phi.right)
    if isinstance(phi, ExN):
        return is_sigma_n(phi.body)
    return False


def has_search(phi: Formula) -> bool:
    """True when truth needs a witness search"""
    if isinstance(phi, (ExN, AllN)):
        return True
    if isinstance(phi, (And, Or)):
        return has_search(phi.left) or has_search(phi.right)
    return False


def is_sigma_n_sequent(gamma: Iterable[Formula]) -> bool:
    return all(isinstance(f, NotMem) or is_sigma_n(f) for f in gamma)


def k_of(gamma: Iterable[Formula]) -> int:
    """max({2} u {3n | n notin N in gamma})"""
    return max([2] + [3 * eval_term(f.term) for f in gamma if isinstance(f, NotMem)])


def sequent_false_in(gamma: Iterable[Formula], K: int, budget: EvalBudget = None) -> bool:
    return not any(truth_in_K(f, K, budget) for f in gamma if is_sigma_n(f))


def truth_threshold(phi: Formula, limit: int = WITNESS_SEARCH_LIMIT,
                    budget: EvalBudget = None) -> Union[int, float]:
    """
    Least K in which a Sigma^N formula is true

    Returns inf when no witness m <= limit makes it true; truth in K is then
    ruled out for every K <= 3 * limit + 3.
    """
    if isinstance(phi, Prime):
        return 0 if prime_holds(phi, budget) else inf
    if isinstance(phi, Mem):
        return 3 * eval_term(phi.term, budget) + 1
    if isinstance(phi, And):
        return max(truth_threshold(phi.left, limit, budget), truth_threshold(phi.right, limit, budget))
    if isinstance(phi, Or):
        return min(truth_threshold(phi.left, limit, budget), truth_threshold(phi.right, limit, budget))
    if isinstance(phi, ExN):
        best = inf
        for m in range(limit + 1):
            if 3 * m + 1 >= best:
                break
            inner = truth_threshold(subst(phi.body, phi.var.name, num(m)), limit, budget)
            best = min(best, max(3 * m + 1, inner))
        return best
    raise ValueError(f"{format_formula(phi)} is not a Sigma^N formula")


def sequent_threshold(gamma: Iterable[Formula], limit: int = WITNESS_SEARCH_LIMIT) -> Union[int, float]:
    return min([truth_threshold(f, limit) for f in gamma if is_sigma_n(f)], default=inf)


# ============================================================================
# TEXT
# ============================================================================

def format_term(t: NTerm) -> str:
    if isinstance(t, NNum):
        return str(t.value)
    if isinstance(t, NVar):
        return t.name
    if t.op in ('S', 'feps*'):
        return f"{t.op}({format_term(t.args[0])})"
    return f"({format_term(t.args[0])} {t.op} {format_term(t.args[1])})"


def format_formula(phi: Formula) -> str:
    if isinstance(phi, Prime):
        return f"{format_term(phi.left)} {phi.rel} {format_term(phi.right)}"
    if isinstance(phi, Mem):
        return f"{format_term(phi.term)} in N"
    if isinstance(phi, NotMem):
        return f"{format_term(phi.term)} notin N"
    if isinstance(phi, And):
        return f"({format_formula(phi.left)} /\\ {format_formula(phi.right)})"
    if isinstance(phi, Or):
        return f"({format_formula(phi.left)} \\/ {format_formula(phi.right)})"
    word = 'ex' if isinstance(phi, ExN) else 'all'
    return f"{word} {phi.var.name} in N {format_formula(phi.body)}"


def format_sequent(gamma: Iterable[Formula]) -> list:
    """Sorted renderings, stable across runs"""
    return sorted(format_formula(f) for f in gamma)
