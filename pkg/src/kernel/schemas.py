"""
Axiom schemas and theories

A schema is a named builder from typed parameters to a formula, with an
optional side condition. Theories are tuples of schemas; a closed extra axiom
is a schema without parameters.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Optional, Tuple

from syntax import (
    Formula, PredicateAbstract, Succ, Add, Mul, OAdd, Tower, WPow, WMul, Fund,
    Eq, Prec, FGraph, IGraph, Not, And, Or, Imp, Iff, Forall, Exists,
    ZERO_T, ONE_T, EPS0_T, apply, subst, fresh_var, build_limit,
)


class ParamKind(Enum):
    FORMULA = 'formula'
    TERM = 'term'
    VAR = 'var'
    ABSTRACT = 'abstract'


@dataclass(frozen=True)
class Schema:
    id: str
    params: Tuple[Tuple[str, ParamKind], ...]
    builder: Callable[..., Formula] = field(repr=False)
    text: str
    side_condition: Optional[Callable[..., Optional[str]]] = field(default=None, repr=False)

    def build(self, **values) -> Formula:
        return self.builder(**values)

    def check_side(self, **values) -> Optional[str]:
        """Reason the side condition fails, or None"""
        if self.side_condition is None:
            return None
        return self.side_condition(**values)


F = ParamKind.FORMULA
T = ParamKind.TERM
V = ParamKind.VAR
P = ParamKind.ABSTRACT


def _schema(id, params, builder, text, side=None) -> Schema:
    return Schema(id, tuple(params), builder, text, side)


def _not_free(var_name: str, formula_name: str):
    def check(**values) -> Optional[str]:
        if values[var_name] in values[formula_name].fv:
            return f"{values[var_name].name} is free in {formula_name}"
        return None
    return check


# ============================================================================
# PROPOSITIONAL AXIOMS
# ============================================================================

LOGICAL = (
    _schema('L_K', [('A', F), ('B', F)],
            lambda A, B: Imp(A, Imp(B, A)),
            "A -> (B -> A)"),
    _schema('L_S', [('A', F), ('B', F), ('C', F)],
            lambda A, B, C: Imp(Imp(A, Imp(B, C)), Imp(Imp(A, B), Imp(A, C))),
            "(A -> (B -> C)) -> ((A -> B) -> (A -> C))"),
    _schema('L_CONTRA', [('A', F), ('B', F)],
            lambda A, B: Imp(Imp(Not(A), Not(B)), Imp(B, A)),
            "(~A -> ~B) -> (B -> A)"),
    _schema('L_EFQ', [('A', F), ('B', F)],
            lambda A, B: Imp(Not(A), Imp(A, B)),
            "~A -> (A -> B)"),
    _schema('L_AND_I', [('A', F), ('B', F)],
            lambda A, B: Imp(A, Imp(B, And(A, B))),
            "A -> (B -> (A /\\ B))"),
    _schema('L_AND_E1', [('A', F), ('B', F)],
            lambda A, B: Imp(And(A, B), A),
            "(A /\\ B) -> A"),
    _schema('L_AND_E2', [('A', F), ('B', F)],
            lambda A, B: Imp(And(A, B), B),
            "(A /\\ B) -> B"),
    _schema('L_OR_I1', [('A', F), ('B', F)],
            lambda A, B: Imp(A, Or(A, B)),
            "A -> (A \\/ B)"),
    _schema('L_OR_I2', [('A', F), ('B', F)],
            lambda A, B: Imp(B, Or(A, B)),
            "B -> (A \\/ B)"),
    _schema('L_OR_E', [('A', F), ('B', F), ('C', F)],
            lambda A, B, C: Imp(Imp(A, C), Imp(Imp(B, C), Imp(Or(A, B), C))),
            "(A -> C) -> ((B -> C) -> ((A \\/ B) -> C))"),
    _schema('L_IFF_I', [('A', F), ('B', F)],
            lambda A, B: Imp(Imp(A, B), Imp(Imp(B, A), Iff(A, B))),
            "(A -> B) -> ((B -> A) -> (A <-> B))"),
    _schema('L_IFF_E1', [('A', F), ('B', F)],
            lambda A, B: Imp(Iff(A, B), Imp(A, B)),
            "(A <-> B) -> (A -> B)"),
    _schema('L_IFF_E2', [('A', F), ('B', F)],
            lambda A, B: Imp(Iff(A, B), Imp(B, A)),
            "(A <-> B) -> (B -> A)"),
)

# ============================================================================
# QUANTIFIER AND EQUALITY AXIOMS
# ============================================================================

QUANTIFIER = (
    _schema('Q_ALL_ELIM', [('v', V), ('A', F), ('t', T)],
            lambda v, A, t: Imp(Forall(v, A), subst(A, v, t)),
            "all v A -> A[v:=t]"),
    _schema('Q_ALL_DIST', [('v', V), ('A', F), ('B', F)],
            lambda v, A, B: Imp(Forall(v, Imp(B, A)), Imp(B, Forall(v, A))),
            "all v (B -> A) -> (B -> all v A), v not free in B",
            _not_free('v', 'B')),
    _schema('Q_EX_INTRO', [('v', V), ('A', F), ('t', T)],
            lambda v, A, t: Imp(subst(A, v, t), Exists(v, A)),
            "A[v:=t] -> ex v A"),
    _schema('Q_EX_ELIM', [('v', V), ('A', F), ('B', F)],
            lambda v, A, B: Imp(Forall(v, Imp(A, B)), Imp(Exists(v, A), B)),
            "all v (A -> B) -> (ex v A -> B), v not free in B",
            _not_free('v', 'B')),
)

EQUALITY = (
    _schema('E_REFL', [('t', T)],
            lambda t: Eq(t, t),
            "t = t"),
    _schema('E_SUBST', [('s', T), ('t', T), ('P', P)],
            lambda s, t, P: Imp(Eq(s, t), Imp(apply(P, s), apply(P, t))),
            "s = t -> (P(s) -> P(t))"),
)

# ============================================================================
# PEANO ARITHMETIC
# ============================================================================


def _induction(P: PredicateAbstract) -> Formula:
    x = fresh_var('x', P.fv)
    step = Forall(x, Imp(apply(P, x), apply(P, Succ(x))))
    return Imp(And(apply(P, ZERO_T), step), Forall(x, apply(P, x)))


ARITHMETIC = (
    _schema('PA_SUCC_NZ', [('t', T)],
            lambda t: Not(Eq(Succ(t), ZERO_T)),
            "~S(t) = 0"),
    _schema('PA_SUCC_INJ', [('s', T), ('t', T)],
            lambda s, t: Imp(Eq(Succ(s), Succ(t)), Eq(s, t)),
            "S(s) = S(t) -> s = t"),
    _schema('PA_ADD_ZERO', [('t', T)],
            lambda t: Eq(Add(t, ZERO_T), t),
            "(t + 0) = t"),
    _schema('PA_ADD_SUCC', [('s', T), ('t', T)],
            lambda s, t: Eq(Add(s, Succ(t)), Succ(Add(s, t))),
            "(s + S(t)) = S((s + t))"),
    _schema('PA_MUL_ZERO', [('t', T)],
            lambda t: Eq(Mul(t, ZERO_T), ZERO_T),
            "(t * 0) = 0"),
    _schema('PA_MUL_SUCC', [('s', T), ('t', T)],
            lambda s, t: Eq(Mul(s, Succ(t)), Add(Mul(s, t), s)),
            "(s * S(t)) = ((s * t) + s)"),
    _schema('PA_ADD_COMM', [('s', T), ('t', T)],
            lambda s, t: Eq(Add(s, t), Add(t, s)),
            "(s + t) = (t + s)"),
    _schema('PA_ADD_ASSOC', [('r', T), ('s', T), ('t', T)],
            lambda r, s, t: Eq(Add(Add(r, s), t), Add(r, Add(s, t))),
            "((r + s) + t) = (r + (s + t))"),
    _schema('PA_MUL_COMM', [('s', T), ('t', T)],
            lambda s, t: Eq(Mul(s, t), Mul(t, s)),
            "(s * t) = (t * s)"),
    _schema('PA_DISTRIB', [('r', T), ('s', T), ('t', T)],
            lambda r, s, t: Eq(Mul(r, Add(s, t)), Add(Mul(r, s), Mul(r, t))),
            "(r * (s + t)) = ((r * s) + (r * t))"),
    _schema('PA_INDUCTION', [('P', P)],
            _induction,
            "(P(0) /\\ all x (P(x) -> P(S(x)))) -> all x P(x)"),
)

# ============================================================================
# ORDINAL PACK
# ============================================================================


def _decompose(d, b, a) -> Formula:
    g = fresh_var('g', d.fv | b.fv | a.fv)
    x = fresh_var('x', d.fv | b.fv | a.fv | {g})
    inner = Exists(g, And(Prec(g, a), Exists(x, Prec(d, OAdd(b, WMul(g, x))))))
    return Imp(Prec(d, OAdd(b, WPow(a))), Or(Prec(d, b), Or(Eq(d, b), inner)))


def _cases(a) -> Formula:
    c = fresh_var('c', a.fv)
    successor = Exists(c, And(Prec(c, a), Eq(a, OAdd(c, ONE_T))))
    return Or(Eq(a, ZERO_T), Or(successor, build_limit(a)))


ORDINAL = (
    _schema('O_ZERO_MIN', [('t', T)],
            lambda t: Not(Prec(t, ZERO_T)),
            "~t < 0"),
    _schema('O_BELOW_ONE', [('t', T)],
            lambda t: Imp(Prec(t, ONE_T), Eq(ZERO_T, t)),
            "t < S(0) -> 0 = t"),
    _schema('O_SUCC_LT', [('t', T)],
            lambda t: Prec(t, Succ(t)),
            "t < S(t)"),
    _schema('O_TRANS', [('r', T), ('s', T), ('t', T)],
            lambda r, s, t: Imp(Prec(r, s), Imp(Prec(s, t), Prec(r, t))),
            "r < s -> (s < t -> r < t)"),
    _schema('O_ADD_ZERO', [('t', T)],
            lambda t: Eq(OAdd(t, ZERO_T), t),
            "(t ++ 0) = t"),
    _schema('O_ZERO_ADD', [('t', T)],
            lambda t: Eq(OAdd(ZERO_T, t), t),
            "(0 ++ t) = t"),
    _schema('O_WP_ZERO', [],
            lambda: Eq(WPow(ZERO_T), ONE_T),
            "wp(0) = S(0)"),
    _schema('O_TOWER_ZERO', [],
            lambda: Eq(Tower(ZERO_T), ONE_T),
            "tw(0) = S(0)"),
    _schema('O_TOWER_SUCC', [('t', T)],
            lambda t: Eq(WPow(Tower(t)), Tower(Add(t, ONE_T))),
            "wp(tw(t)) = tw((t + S(0)))"),
    _schema('O_DECOMP', [('d', T), ('b', T), ('a', T)],
            _decompose,
            "d < (b ++ wp(a)) -> (d < b \\/ (d = b \\/ ex g (g < a /\\ ex x d < (b ++ wm(g, x)))))"),
    _schema('O_MESH_ZERO', [('b', T), ('g', T)],
            lambda b, g: Eq(OAdd(b, WMul(g, ZERO_T)), b),
            "(b ++ wm(g, 0)) = b"),
    _schema('O_MESH_SUCC', [('b', T), ('g', T), ('x', T)],
            lambda b, g, x: Eq(OAdd(b, WMul(g, Succ(x))), OAdd(OAdd(b, WMul(g, x)), WPow(g))),
            "(b ++ wm(g, S(x))) = ((b ++ wm(g, x)) ++ wp(g))"),
    _schema('O_CASES', [('a', T)],
            _cases,
            "a = 0 \\/ (ex c (c < a /\\ a = (c ++ S(0))) \\/ limit(a))"),
    _schema('O_FS_BELOW', [('a', T), ('x', T)],
            lambda a, x: Imp(build_limit(a), Prec(Fund(a, x), a)),
            "limit(a) -> fs(a, x) < a"),
)

# ============================================================================
# F-GRAPH PACK
# ============================================================================

GRAPH = (
    _schema('F_ZERO', [('t', T)],
            lambda t: FGraph(ZERO_T, t, Succ(t)),
            "F(0, t, S(t))"),
    _schema('F_ITER_ZERO', [('a', T), ('x', T)],
            lambda a, x: IGraph(a, ZERO_T, x, x),
            "I(a, 0, x, x)"),
    _schema('F_ITER_SUCC', [('a', T), ('i', T), ('x', T), ('y', T), ('z', T)],
            lambda a, i, x, y, z: Imp(IGraph(a, i, x, y), Imp(FGraph(a, y, z), IGraph(a, Succ(i), x, z))),
            "I(a, i, x, y) -> (F(a, y, z) -> I(a, S(i), x, z))"),
    _schema('F_SUCC', [('a', T), ('x', T), ('y', T)],
            lambda a, x, y: Imp(IGraph(a, Succ(x), x, y), FGraph(OAdd(a, ONE_T), x, y)),
            "I(a, S(x), x, y) -> F((a ++ S(0)), x, y)"),
    _schema('F_LIM', [('a', T), ('x', T), ('y', T)],
            lambda a, x, y: Imp(build_limit(a), Imp(FGraph(Fund(a, x), x, y), FGraph(a, x, y))),
            "limit(a) -> (F(fs(a, x), x, y) -> F(a, x, y))"),
    _schema('F_EPS', [('t', T), ('y', T)],
            lambda t, y: Imp(FGraph(Tower(Add(t, ONE_T)), t, y), FGraph(EPS0_T, t, y)),
            "F(tw((t + S(0))), t, y) -> F([eps0], t, y)"),
)


# ============================================================================
# THEORIES
# ============================================================================


@dataclass(frozen=True)
class Theory:
    id: str
    schemas: Tuple[Schema, ...]
    description: str = ''

    def __post_init__(self):
        object.__setattr__(self, '_by_id', {s.id: s for s in self.schemas})
        # (justification, formula) -> rejection reason or None
        object.__setattr__(self, 'verdicts', {})

    def get(self, schema_id: str) -> Optional[Schema]:
        return self._by_id.get(schema_id)


FALSUM_AXIOM = _schema('X0', [], lambda: Eq(ZERO_T, ONE_T), "0 = S(0)")

_PURE = LOGICAL + QUANTIFIER + EQUALITY

THEORIES: Dict[str, Theory] = {
    'pure-logic': Theory('pure-logic', _PURE, "first-order logic with equality"),
    'pa-r': Theory('pa-r', _PURE + ARITHMETIC, "PA[R]: induction over formulas with R"),
    'pa-o': Theory('pa-o', _PURE + ARITHMETIC + ORDINAL, "PA[R] with the ordinal pack"),
    'pa-o-f': Theory('pa-o-f', _PURE + ARITHMETIC + ORDINAL + GRAPH,
                     "PA(O,F): ordinal and F-graph packs"),
    'pa-o-f-false': Theory('pa-o-f-false', _PURE + ARITHMETIC + ORDINAL + GRAPH + (FALSUM_AXIOM,),
                           "PA(O,F) with the refutable axiom 0 = S(0)"),
}


def get_theory(theory_id: str) -> Theory:
    if theory_id not in THEORIES:
        raise KeyError(f"unknown theory {theory_id!r}; known: {', '.join(THEORIES)}")
    return THEORIES[theory_id]


def schema_table(theory_id: str = 'pa-o-f-false') -> list:
    """Rows (id, parameters, statement) of the published axiom list"""
    return [
        (s.id, ', '.join(f"{name}:{kind.value}" for name, kind in s.params), s.text)
        for s in get_theory(theory_id).schemas
    ]
