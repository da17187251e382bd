"""
Formula builders: numerals, progressiveness, transfinite induction, the jump
formulas and their iterates
"""

from functools import lru_cache

from ordinals import EPSILON_ZERO
from syntax.ast import (
    Term, Formula, PredicateAbstract, Var, Zero, Succ, Add, Mul, OAdd, OrdLit, Tower, WPow,
    Eq, Prec, RApp, FGraph, Not, And, Or, Imp, Iff, Forall, Exists,
)
from syntax.substitution import apply, fresh_var, subst_R

ZERO_T = Zero()
ONE_T = Succ(ZERO_T)
TWO_T = Add(ONE_T, ONE_T)
EPS0_T = OrdLit(EPSILON_ZERO)

GAMMA = Var('g', 0)
R_ABSTRACT = PredicateAbstract(GAMMA, RApp(GAMMA))


@lru_cache(maxsize=4096)
def numeral(n: int) -> Term:
    """
    Binary numeral: num(0) = 0, num(2j+1) = (num(j) * two) + 1,
    num(2j+2) = num(j+1) * two
    """
    if n < 0:
        raise ValueError("numerals denote natural numbers")
    if n == 0:
        return ZERO_T
    if n % 2:
        return Add(Mul(numeral((n - 1) // 2), TWO_T), ONE_T)
    return Mul(numeral(n // 2), TWO_T)


def forall_below(var: Var, bound: Term, body: Formula) -> Formula:
    return Forall(var, Imp(Prec(var, bound), body))


def exists_below(var: Var, bound: Term, body: Formula) -> Formula:
    return Exists(var, And(Prec(var, bound), body))


def build_prog(psi: PredicateAbstract) -> Formula:
    """Prog(psi) = all a (all b (b < a -> psi(b)) -> psi(a))"""
    avoid = psi.fv
    a = fresh_var('a', avoid)
    b = fresh_var('b', avoid | {a})
    return Forall(a, Imp(forall_below(b, a, apply(psi, b)), apply(psi, a)))


def build_ti(t: Term, psi: PredicateAbstract) -> Formula:
    """TI(t, psi) = Prog(psi) -> all b (b < t -> psi(b))"""
    b = fresh_var('b', t.fv | psi.fv)
    return Imp(build_prog(psi), forall_below(b, t, apply(psi, b)))


def build_limit(a: Term) -> Formula:
    """limit(a) = 0 < a /\\ all c (c < a -> (c ++ 1) < a)"""
    c = fresh_var('c', a.fv)
    return And(Prec(ZERO_T, a), forall_below(c, a, Prec(OAdd(c, ONE_T), a)))


def build_theta(d0: Term, d1: Term) -> Formula:
    """
    Single-R rendering of R(d0) -> R(d1)

    ex v0 ex v1 (all z ((z = d0 \\/ z = d1) -> (R(z) <-> ((z = d0 -> v0 = 1) /\\
    (z = d1 -> v1 = 1)))) /\\ (v0 = 1 -> v1 = 1))
    """
    avoid = d0.fv | d1.fv
    v0 = fresh_var('v', avoid)
    v1 = fresh_var('v', avoid | {v0})
    z = fresh_var('z', avoid)
    selector = And(Imp(Eq(z, d0), Eq(v0, ONE_T)), Imp(Eq(z, d1), Eq(v1, ONE_T)))
    clause = Forall(z, Imp(Or(Eq(z, d0), Eq(z, d1)), Iff(RApp(z), selector)))
    return Exists(v0, Exists(v1, And(clause, Imp(Eq(v0, ONE_T), Eq(v1, ONE_T)))))


def jump_single_body(gamma: Var = GAMMA) -> Formula:
    """
    J'[R](gamma) = all b ex d0 ((d0 < b \\/ d0 = b) /\\
                   all d1 (d1 < (b ++ wp(gamma)) -> theta(d0, d1)))
    """
    b = fresh_var('b', {gamma})
    d0 = fresh_var('d', {gamma, b})
    d1 = fresh_var('d', {gamma, b, d0})
    below = forall_below(d1, OAdd(b, WPow(gamma)), build_theta(d0, d1))
    return Forall(b, Exists(d0, And(Or(Prec(d0, b), Eq(d0, b)), below)))


def jump_naive_body(gamma: Var = GAMMA) -> Formula:
    """J[R](gamma) = all b (all d (d < b -> R d) -> all d (d < b ++ wp(gamma) -> R d))"""
    b = fresh_var('b', {gamma})
    d = fresh_var('d', {gamma, b})
    return Forall(b, Imp(forall_below(d, b, RApp(d)),
                         forall_below(d, OAdd(b, WPow(gamma)), RApp(d))))


JUMP_SINGLE = PredicateAbstract(GAMMA, jump_single_body())
JUMP_NAIVE = PredicateAbstract(GAMMA, jump_naive_body())


def build_jump(psi: PredicateAbstract) -> PredicateAbstract:
    """gamma-hat J[psi], the two-occurrence jump"""
    return PredicateAbstract(GAMMA, subst_R(JUMP_NAIVE.body, psi))


def build_jump_single(psi: PredicateAbstract) -> PredicateAbstract:
    """gamma-hat J'[psi]"""
    return PredicateAbstract(GAMMA, subst_R(JUMP_SINGLE.body, psi))


@lru_cache(maxsize=None)
def jump_abstract(n: int) -> PredicateAbstract:
    """gamma-hat J'_n[R]"""
    psi = R_ABSTRACT
    for _ in range(n):
        psi = build_jump_single(psi)
    return psi


def jump_iterate(n: int) -> Formula:
    """J'_n[R](gamma): J'_0 = R(gamma), J'_(n+1) = J'[gamma-hat J'_n]"""
    return jump_abstract(n).body


def naive_jump_iterate(n: int) -> Formula:
    psi = R_ABSTRACT
    for _ in range(n):
        psi = build_jump(psi)
    return psi.body


def feps_down_abstract() -> PredicateAbstract:
    """gamma-hat F_gamma-down = gamma-hat all x ex y F(gamma, x, y)"""
    x = Var('x', 0)
    y = Var('y', 0)
    return PredicateAbstract(GAMMA, Forall(x, Exists(y, FGraph(GAMMA, x, y))))


def feps_total(t: Term) -> Formula:
    """F_eps0(t) down, as ex y F([eps0], t, y)"""
    y = fresh_var('y', t.fv)
    return Exists(y, FGraph(EPS0_T, t, y))
