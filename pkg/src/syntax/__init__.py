import sys

# Iterated jump formulas nest a few thousand levels deep
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

from syntax.ast import (
    Term, Formula, PredicateAbstract, Var, Zero, Succ, Add, Mul, OAdd, OrdLit, Tower, WPow,
    WMul, Fund, Eq, Prec, RApp, FGraph, IGraph, Not, And, Or, Imp, Iff, Forall, Exists,
)
from syntax.printer import render, length, tokens
from syntax.parser import (
    FormulaParseError, parse_term, parse_formula, parse_abstract, parse_var,
)
from syntax.substitution import (
    fresh_var, subst_term, subst, apply, subst_R, subst_R_abstract,
    occurrences_of_R, alpha_equal,
)
from syntax.builders import (
    ZERO_T, ONE_T, TWO_T, EPS0_T, GAMMA, R_ABSTRACT, JUMP_SINGLE, JUMP_NAIVE,
    numeral, forall_below, exists_below, build_prog, build_ti, build_limit, build_theta,
    build_jump, build_jump_single, jump_abstract, jump_iterate, naive_jump_iterate,
    feps_down_abstract, feps_total,
)
from syntax.semantics import EvaluationError, evaluate, eval_term
