"""
Evaluation of formulas in small finite structures

Quantifiers range over {0, ..., domain_size - 1}; terms are computed in the
natural numbers, so S(x) may leave the domain. Ordinal symbols other than
finite literals and ++ (read as +) are not interpreted here.
"""

from typing import AbstractSet, Dict

from syntax.ast import (
    Term, Formula, Var, Zero, Succ, Add, Mul, OAdd, OrdLit,
    Eq, Prec, RApp, Not, And, Or, Imp, Iff, Forall, Exists,
)


class EvaluationError(ValueError):
    """Symbol without an interpretation in the finite structures"""


def eval_term(t: Term, env: Dict[Var, int]) -> int:
    cls = type(t)
    if cls is Var:
        if t not in env:
            raise EvaluationError(f"unassigned variable {t.name}")
        return env[t]
    if cls is Zero:
        return 0
    if cls is Succ:
        return eval_term(t.arg, env) + 1
    if cls in (Add, OAdd):
        return eval_term(t.left, env) + eval_term(t.right, env)
    if cls is Mul:
        return eval_term(t.left, env) * eval_term(t.right, env)
    if cls is OrdLit and t.value.is_finite:
        return t.value.as_int()
    raise EvaluationError(f"no finite interpretation for {type(t).__name__}")


def evaluate(phi: Formula, domain_size: int, r_set: AbstractSet[int],
             env: Dict[Var, int] = None) -> bool:
    """
    Truth of phi with R read as membership in r_set

    Args:
        phi: formula without F
        domain_size: number of elements quantifiers range over
        r_set: interpretation of R
        env: values of the free variables

    Returns:
        truth value
    """
    env = dict(env or {})
    return _eval(phi, domain_size, r_set, env)


def _eval(phi: Formula, n: int, r_set: AbstractSet[int], env: Dict[Var, int]) -> bool:
    cls = type(phi)
    if cls is Eq:
        return eval_term(phi.left, env) == eval_term(phi.right, env)
    if cls is Prec:
        return eval_term(phi.left, env) < eval_term(phi.right, env)
    if cls is RApp:
        return eval_term(phi.arg, env) in r_set
    if cls is Not:
        return not _eval(phi.body, n, r_set, env)
    if cls is And:
        return _eval(phi.left, n, r_set, env) and _eval(phi.right, n, r_set, env)
    if cls is Or:
        return _eval(phi.left, n, r_set, env) or _eval(phi.right, n, r_set, env)
    if cls is Imp:
        return (not _eval(phi.left, n, r_set, env)) or _eval(phi.right, n, r_set, env)
    if cls is Iff:
        return _eval(phi.left, n, r_set, env) == _eval(phi.right, n, r_set, env)
    if cls in (Forall, Exists):
        old = env.get(phi.var)
        try:
            for value in range(n):
                env[phi.var] = value
                result = _eval(phi.body, n, r_set, env)
                if cls is Forall and not result:
                    return False
                if cls is Exists and result:
                    return True
            return cls is Forall
        finally:
            if old is None:
                env.pop(phi.var, None)
            else:
                env[phi.var] = old
    raise EvaluationError(f"no finite interpretation for {cls.__name__}")
