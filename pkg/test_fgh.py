"""
Tests for the budgeted fast-growing hierarchy evaluator
"""

import sys
import os

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from ordinals import ZERO, ONE, OMEGA, EPSILON_ZERO, nat, parse_ordinal, strictly_below
from fgh import (
    EvalBudget, Converged, DivergedSteps, DivergedValue, LeqYes, LeqNo,
    fgh_eval, fgh_leq, hierarchy_iterate, feps_eval, feps_inverse, feps_star,
    outcome_to_dict,
)

DESK = EvalBudget(1_000_000, 10 ** 12)


@pytest.mark.parametrize('n', range(11))
def test_closed_forms_of_the_first_levels(n):
    assert fgh_eval(ZERO, n, DESK).value == n + 1
    assert fgh_eval(ONE, n, DESK).value == 2 * n + 1
    assert fgh_eval(nat(2), n, DESK).value == 2 ** (n + 1) * (n + 1) - 1


def test_f2_of_2_is_23():
    outcome = fgh_eval(nat(2), 2, DESK)
    assert isinstance(outcome, Converged)
    assert outcome.value == 23


def test_limit_index_diagonalizes():
    # F_w(1) = F_2(1)
    assert fgh_eval(OMEGA, 1, DESK).value == 7
    # F_(w+1)(0) = F_w(0) = F_1(0)
    assert fgh_eval(parse_ordinal('w + 1'), 0, DESK).value == 1


def test_zero_clause_run_counts_one_step():
    outcome = fgh_eval(ZERO, 5, DESK)
    assert outcome.steps_used == 1


def test_value_cap_reports_divergence():
    outcome = fgh_eval(OMEGA, 2, EvalBudget(1_000_000, 10 ** 6))
    assert isinstance(outcome, DivergedValue)


def test_step_cap_reports_divergence():
    outcome = fgh_eval(nat(2), 10, EvalBudget(1, 10 ** 12))
    assert isinstance(outcome, DivergedSteps)
    assert outcome.steps_used == 1


def test_budget_must_be_positive():
    with pytest.raises(ValueError):
        EvalBudget(0, 10)


def test_iterate_composes():
    assert hierarchy_iterate(ONE, 1, 2, DESK).value == 7
    assert hierarchy_iterate(ONE, 1, 0, DESK).value == 1


def test_cutoff_comparison():
    assert fgh_leq(nat(2), 2, 23) == LeqYes(23)
    assert isinstance(fgh_leq(nat(2), 2, 22), LeqNo)
    assert fgh_leq(EPSILON_ZERO, 0, 1) == LeqYes(1)
    assert isinstance(fgh_leq(EPSILON_ZERO, 1, 10 ** 6), LeqNo)


def test_feps_at_zero():
    assert feps_eval(0, DESK).value == 1


@pytest.mark.parametrize('x', range(9))
def test_slow_function_at_desk_scale(x):
    assert feps_inverse(x) == 0
    assert feps_star(x, DESK).value == 2 * x + 1


def test_outcome_to_dict():
    assert outcome_to_dict(fgh_eval(nat(2), 2, DESK)) == {
        'outcome': 'Converged', 'steps_used': fgh_eval(nat(2), 2, DESK).steps_used, 'value': 23,
    }
    diverged = outcome_to_dict(DivergedValue(3))
    assert diverged == {'outcome': 'DivergedValue', 'steps_used': 3}


def test_budget_from_profile():
    budget = EvalBudget.from_profile('micro')
    assert budget.max_steps == 10_000
    assert budget.max_value == 10 ** 6


# ============================================================================
# PROPERTIES
# ============================================================================

SMALL = [ZERO, ONE, nat(2), nat(3), OMEGA, parse_ordinal('w + 1'),
         parse_ordinal('w*2'), parse_ordinal('w^(2)')]
LADDER = [EvalBudget(10, 100), EvalBudget(1_000, 10 ** 4), EvalBudget(100_000, 10 ** 8), DESK]


@pytest.mark.parametrize('a', SMALL, ids=lambda a: str(a))
def test_values_exceed_the_argument(a):
    for n in range(4):
        outcome = fgh_eval(a, n, DESK)
        if isinstance(outcome, Converged):
            assert outcome.value > n


@pytest.mark.parametrize('a', SMALL, ids=lambda a: str(a))
def test_converged_values_survive_larger_budgets(a):
    for n in range(4):
        outcomes = [fgh_eval(a, n, b) for b in LADDER]
        for small, large in zip(outcomes, outcomes[1:]):
            if isinstance(small, Converged):
                assert isinstance(large, Converged) and large.value == small.value


def test_step_down_bounds_the_hierarchy():
    compared = 0
    for b in SMALL:
        for a in SMALL:
            if not a < b:
                continue
            for n in range(3):
                if strictly_below(a, b, n, 100_000) is not True:
                    continue
                fa, fb = fgh_eval(a, n, DESK), fgh_eval(b, n, DESK)
                if isinstance(fa, Converged) and isinstance(fb, Converged):
                    assert fa.value <= fb.value
                    compared += 1
    assert compared > 0
