"""
Capture-avoiding substitution, substitution for R, and alpha-equality
"""

from typing import Dict, Iterable, Optional

from syntax.ast import (
    Term, Formula, PredicateAbstract, Var,
    Eq, Prec, RApp, FGraph, IGraph, Not,
    BINARY_TERMS, UNARY_TERMS, BINARY_FUNCTIONS, BINARY_FORMULAS, QUANTIFIERS,
)

_PAIR_TERMS = BINARY_TERMS + BINARY_FUNCTIONS


def fresh_var(prefix: str, avoid: Iterable[Var]) -> Var:
    """Smallest-index variable with the given prefix outside avoid"""
    used = {v.index for v in avoid if v.prefix == prefix}
    i = 0
    while i in used:
        i += 1
    return Var(prefix, i)


def subst_term(t: Term, v: Var, s: Term) -> Term:
    """t[v := s]"""
    if v not in t.fv:
        return t
    cls = type(t)
    if cls is Var:
        return s
    if cls in UNARY_TERMS:
        return cls(subst_term(t.arg, v, s))
    if cls in _PAIR_TERMS:
        return cls(subst_term(t.left, v, s), subst_term(t.right, v, s))
    raise TypeError(f"not a term: {t!r}")


def subst(phi: Formula, v: Var, s: Term) -> Formula:
    """phi[v := s], renaming bound variables that would capture s"""
    if v not in phi.fv:
        return phi
    cls = type(phi)
    if cls in (Eq, Prec):
        return cls(subst_term(phi.left, v, s), subst_term(phi.right, v, s))
    if cls is RApp:
        return RApp(subst_term(phi.arg, v, s))
    if cls is FGraph:
        return FGraph(subst_term(phi.index, v, s), subst_term(phi.arg, v, s),
                      subst_term(phi.value, v, s))
    if cls is IGraph:
        return IGraph(subst_term(phi.index, v, s), subst_term(phi.count, v, s),
                      subst_term(phi.arg, v, s), subst_term(phi.value, v, s))
    if cls is Not:
        return Not(subst(phi.body, v, s))
    if cls in BINARY_FORMULAS:
        return cls(subst(phi.left, v, s), subst(phi.right, v, s))
    if cls in QUANTIFIERS:
        bound, body = phi.var, phi.body
        if bound in s.fv:
            renamed = fresh_var(bound.prefix, body.fv | s.fv | {v})
            body = subst(body, bound, renamed)
            bound = renamed
        return cls(bound, subst(body, v, s))
    raise TypeError(f"not a formula: {phi!r}")


def apply(abstract: PredicateAbstract, t: Term) -> Formula:
    """psi(t) for the abstract gamma-hat psi"""
    return subst(abstract.body, abstract.var, t)


def subst_R(phi: Formula, psi: PredicateAbstract,
            memo: Optional[Dict[Formula, Formula]] = None) -> Formula:
    """
    Replace every R(t) in phi by psi(t)

    Binders of phi that would capture a free variable of psi are renamed.

    Args:
        phi: formula mentioning R
        psi: abstract substituted for R
        memo: results already computed for this psi; passing the same dict
            to several calls shares the work on common subformulas

    Returns:
        the substituted formula
    """
    return _subst_R(phi, psi, psi.fv, {} if memo is None else memo)


def _subst_R(phi: Formula, psi: PredicateAbstract, extra: frozenset, memo: dict) -> Formula:
    if phi.r_count == 0:
        return phi
    done = memo.get(phi)
    if done is not None:
        return done
    cls = type(phi)
    if cls is RApp:
        result = apply(psi, phi.arg)
    elif cls is Not:
        result = Not(_subst_R(phi.body, psi, extra, memo))
    elif cls in BINARY_FORMULAS:
        result = cls(_subst_R(phi.left, psi, extra, memo), _subst_R(phi.right, psi, extra, memo))
    elif cls in QUANTIFIERS:
        bound, body = phi.var, phi.body
        if bound in extra:
            renamed = fresh_var(bound.prefix, body.fv | extra)
            body = subst(body, bound, renamed)
            bound = renamed
        result = cls(bound, _subst_R(body, psi, extra, memo))
    else:
        raise TypeError(f"not a formula: {phi!r}")
    memo[phi] = result
    return result


def subst_R_abstract(abstract: PredicateAbstract, psi: PredicateAbstract,
                     memo: Optional[Dict[Formula, Formula]] = None) -> PredicateAbstract:
    body = abstract.body
    var = abstract.var
    if var in psi.fv:
        renamed = fresh_var(var.prefix, body.fv | psi.fv)
        body = subst(body, var, renamed)
        var = renamed
    return PredicateAbstract(var, subst_R(body, psi, memo))


def occurrences_of_R(phi: Formula) -> int:
    return phi.r_count


# ============================================================================
# ALPHA-EQUALITY
# ============================================================================

def alpha_equal(a, b) -> bool:
    """
    Equality up to renaming of bound variables

    Works on terms, formulas and predicate abstracts.
    """
    if isinstance(a, PredicateAbstract) or isinstance(b, PredicateAbstract):
        if not (isinstance(a, PredicateAbstract) and isinstance(b, PredicateAbstract)):
            return False
        return _alpha(a.body, b.body, {a.var: 0}, {b.var: 0}, [1])
    if isinstance(a, Term) or isinstance(b, Term):
        # terms have no binders
        return a is b
    return _alpha(a, b, {}, {}, [0])


def _same_binding(node, env_a: dict, env_b: dict) -> bool:
    return all(env_a.get(v) == env_b.get(v) for v in node.fv)


def _alpha_term(s: Term, t: Term, env_a: dict, env_b: dict) -> bool:
    if s is t and _same_binding(s, env_a, env_b):
        return True
    cls = type(s)
    if cls is not type(t):
        return False
    if cls is Var:
        ia, ib = env_a.get(s), env_b.get(t)
        if ia is None and ib is None:
            return s is t
        return ia == ib
    if cls in UNARY_TERMS:
        return _alpha_term(s.arg, t.arg, env_a, env_b)
    if cls in _PAIR_TERMS:
        return (_alpha_term(s.left, t.left, env_a, env_b)
                and _alpha_term(s.right, t.right, env_a, env_b))
    # closed leaves: zero and ordinal literals
    return s is t


def _alpha(a: Formula, b: Formula, env_a: dict, env_b: dict, counter: list) -> bool:
    if a is b and _same_binding(a, env_a, env_b):
        return True
    cls = type(a)
    if cls is not type(b):
        return False
    if cls in (Eq, Prec):
        return (_alpha_term(a.left, b.left, env_a, env_b)
                and _alpha_term(a.right, b.right, env_a, env_b))
    if cls is RApp:
        return _alpha_term(a.arg, b.arg, env_a, env_b)
    if cls is FGraph:
        return (_alpha_term(a.index, b.index, env_a, env_b)
                and _alpha_term(a.arg, b.arg, env_a, env_b)
                and _alpha_term(a.value, b.value, env_a, env_b))
    if cls is IGraph:
        return (_alpha_term(a.index, b.index, env_a, env_b)
                and _alpha_term(a.count, b.count, env_a, env_b)
                and _alpha_term(a.arg, b.arg, env_a, env_b)
                and _alpha_term(a.value, b.value, env_a, env_b))
    if cls is Not:
        return _alpha(a.body, b.body, env_a, env_b, counter)
    if cls in BINARY_FORMULAS:
        return (_alpha(a.left, b.left, env_a, env_b, counter)
                and _alpha(a.right, b.right, env_a, env_b, counter))
    if cls in QUANTIFIERS:
        level = counter[0]
        counter[0] += 1
        old_a, old_b = env_a.get(a.var), env_b.get(b.var)
        env_a[a.var] = level
        env_b[b.var] = level
        try:
            return _alpha(a.body, b.body, env_a, env_b, counter)
        finally:
            _restore(env_a, a.var, old_a)
            _restore(env_b, b.var, old_b)
    raise TypeError(f"not a formula: {a!r}")


def _restore(env: dict, var: Var, old) -> None:
    if old is None:
        del env[var]
    else:
        env[var] = old
