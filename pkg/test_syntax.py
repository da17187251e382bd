"""
Tests for arithmetic syntax: rendering, parsing, substitution, builders
"""

import sys
import os

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from syntax import (
    Var, Zero, Succ, Add, OAdd, WPow, WMul, Fund, IGraph, Eq, Prec, RApp, Forall, Exists, Imp,
    ZERO_T, ONE_T, build_limit, jump_abstract, subst_R_abstract,
    render, length, parse_formula, parse_term, parse_abstract, FormulaParseError,
    subst, subst_R, apply, alpha_equal, occurrences_of_R, fresh_var,
    R_ABSTRACT, numeral, build_ti, build_theta, jump_iterate, naive_jump_iterate,
    evaluate, eval_term,
)

X0 = Var('x', 0)
Y0 = Var('y', 0)


# ============================================================================
# RENDERING AND PARSING
# ============================================================================

@pytest.mark.parametrize('text', [
    'all x0 (R(x0) -> ex y0 x0 < y0)',
    '~S(0) = 0',
    'F([eps0], x0, y0)',
    '(tw(x0) ++ wp(0)) = S(0)',
    '((x0 + y0) * S(0)) = [w + 1]',
    '(x0 ++ wm(y0, S(0))) = x0',
    'fs(x0, y0) < x0',
    '(I(x0, S(0), y0, y0) -> F(x0, y0, y0))',
])
def test_render_parse_round_trip(text):
    assert render(parse_formula(text)) == text


def test_built_formulas_survive_a_round_trip():
    phi = build_ti(numeral(3), R_ABSTRACT)
    assert parse_formula(render(phi)) == phi


@pytest.mark.parametrize('text', ['all (x0)', 'x0 <', 'R(x0', '(x0 = 0 ?? y0 = 0)', 'x0 = 0 y0'])
def test_parse_errors(text):
    with pytest.raises(FormulaParseError):
        parse_formula(text)


def test_parse_abstract_and_term():
    psi = parse_abstract('\\g0. g0 = 0')
    assert psi.var == Var('g', 0)
    assert apply(psi, Succ(Zero())) == Eq(Succ(Zero()), Zero())
    assert parse_term('S(S(0))') == Succ(Succ(Zero()))


def test_equal_nodes_are_shared():
    assert Succ(Zero()) is Succ(Zero())
    assert parse_formula('fs(x0, y0) < x0') is Prec(Fund(X0, Y0), X0)
    assert parse_term('wm(x0, 0)') is WMul(X0, ZERO_T)
    assert IGraph(X0, ZERO_T, Y0, Y0).fv == frozenset({X0, Y0})


def test_limit_formula():
    limit = build_limit(X0)
    assert render(limit).startswith('(0 < x0 /\\ all ')
    assert limit.fv == frozenset({X0})


# ============================================================================
# COUNTING
# ============================================================================

def test_length_counts_tokens():
    assert length(Eq(Zero(), Zero())) == 3
    assert length(RApp(X0)) == 4
    assert length(Succ(Zero())) == 4


def test_raw_mode_charges_index_digits():
    v = Var('x', 12)
    assert length(v) == 1
    assert length(v, 'raw') == 3
    with pytest.raises(ValueError):
        length(v, 'bogus')


@pytest.mark.parametrize('n', range(21))
def test_numerals_denote_their_value(n):
    assert eval_term(numeral(n), {}) == n


def test_numerals_are_logarithmic():
    assert length(numeral(1000)) < 20 * len(bin(1000))


def test_numeral_length_scan():
    sample = list(range(1, 10 ** 6 + 1, 997)) + [2 ** k - 1 for k in range(1, 21)] + [10 ** 6]
    assert all(length(numeral(n)) <= 18 * n.bit_length() for n in sample)


# ============================================================================
# SUBSTITUTION
# ============================================================================

def test_substitution_avoids_capture():
    phi = parse_formula('ex y0 x0 < y0')
    result = subst(phi, X0, Y0)
    assert alpha_equal(result, parse_formula('ex y1 y0 < y1'))
    assert not alpha_equal(result, parse_formula('ex y0 y0 < y0'))


def test_bound_variables_are_not_substituted():
    phi = parse_formula('all x0 x0 = 0')
    assert subst(phi, X0, Zero()) == phi


def test_alpha_equality():
    assert alpha_equal(parse_formula('all x0 R(x0)'), parse_formula('all x1 R(x1)'))
    assert not alpha_equal(parse_formula('all x0 R(x0)'), parse_formula('all x1 R(x0)'))


def test_alpha_equality_on_terms():
    assert alpha_equal(Add(ZERO_T, ONE_T), Add(ZERO_T, ONE_T))
    assert alpha_equal(OAdd(X0, WPow(Y0)), parse_term('(x0 ++ wp(y0))'))
    assert not alpha_equal(X0, Y0)
    assert not alpha_equal(X0, parse_formula('x0 = x0'))


def test_subst_R_composes():
    phi = build_ti(numeral(2), R_ABSTRACT)
    inner = jump_abstract(2)
    outer = parse_abstract('\\g0. ex y0 g0 < y0')
    stepwise = subst_R(subst_R(phi, inner), outer)
    at_once = subst_R(phi, subst_R_abstract(inner, outer))
    assert occurrences_of_R(stepwise) == 0
    assert alpha_equal(stepwise, at_once)


def test_subst_R_memo_is_shared():
    memo = {}
    first = subst_R(build_ti(numeral(1), R_ABSTRACT), jump_abstract(1), memo)
    assert memo
    again = subst_R(build_ti(numeral(1), R_ABSTRACT), jump_abstract(1), memo)
    assert again is first


def test_subst_R_replaces_every_occurrence():
    phi = parse_formula('(R(0) -> R(S(0)))')
    psi = parse_abstract('\\g0. ex y0 g0 < y0')
    result = subst_R(phi, psi)
    assert occurrences_of_R(result) == 0
    assert alpha_equal(result, parse_formula('(ex y0 0 < y0 -> ex y0 S(0) < y0)'))


def test_fresh_var_skips_used_indices():
    assert fresh_var('v', {Var('v', 0), Var('v', 1), Var('w', 2)}) == Var('v', 2)


# ============================================================================
# BUILDERS
# ============================================================================

@pytest.mark.parametrize('i', range(3))
@pytest.mark.parametrize('j', range(3))
@pytest.mark.parametrize('r_set', [set(), {0}, {1}, {0, 2}, {0, 1, 2}])
def test_theta_means_implication(i, j, r_set):
    a0, a1 = Var('a', 0), Var('a', 1)
    theta = build_theta(a0, a1)
    assert occurrences_of_R(theta) == 1
    assert evaluate(theta, 3, r_set, {a0: i, a1: j}) == (i not in r_set or j in r_set)


def test_single_occurrence_jump_grows_linearly():
    lengths = [length(jump_iterate(n)) for n in range(1, 101)]
    differences = {b - a for a, b in zip(lengths, lengths[1:])}
    assert len(differences) == 1
    assert all(occurrences_of_R(jump_iterate(n)) == 1 for n in range(6))


@pytest.mark.parametrize('n', range(7))
def test_naive_jump_doubles_occurrences(n):
    assert occurrences_of_R(naive_jump_iterate(n)) == 2 ** n


def test_finite_evaluation():
    phi = parse_formula('all x0 ex y0 x0 < y0')
    assert evaluate(phi, 5, set()) is False
    assert evaluate(parse_formula('ex x0 R(x0)'), 3, {2}) is True
