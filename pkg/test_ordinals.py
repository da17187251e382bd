"""
Tests for the ordinal notation system and the step-down relation
"""

import random
import sys
import os

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from ordinals import (
    Ordinal, OrdinalError, OrdinalParseError, Comparison,
    ZERO, ONE, OMEGA, EPSILON_ZERO,
    nat, compare, add, successor, predecessor, omega_power, omega_tower,
    fund_seq, mesh, parse_ordinal, format_ordinal,
    Reached, NotOnPath, BudgetExhausted, step_down, strictly_below, reached_or_equal,
)

BUDGET = 100_000


def w(text: str) -> Ordinal:
    return parse_ordinal(text)


def random_ordinal(rng: random.Random, depth: int) -> Ordinal:
    """CNF with at most three terms, exponents of smaller depth, coefficients <= 9"""
    if depth == 0 or rng.random() < 0.25:
        return nat(rng.randint(0, 9))
    exponents = sorted({random_ordinal(rng, depth - 1) for _ in range(rng.randint(1, 3))},
                       reverse=True)
    total = ZERO
    for e in exponents:
        total = add(total, Ordinal(((e, rng.randint(1, 9)),)))
    return total


# ============================================================================
# TEXT FORMAT
# ============================================================================

@pytest.mark.parametrize('text', [
    '0', '7', 'w', 'w*3', 'w + 1', 'w^(2)*3 + w + 5', 'w^(w)', 'w^(w^(w)) + w^(w + 1)', 'eps0',
])
def test_canonical_text_is_stable(text):
    assert format_ordinal(parse_ordinal(text)) == text


def test_parse_normalizes_absorbed_terms():
    assert w('1 + w') == OMEGA
    assert format_ordinal(w('w + w')) == 'w*2'
    assert format_ordinal(w('w^(1)*1')) == 'w'


@pytest.mark.parametrize('text', ['', 'w^', 'w^(', 'eps0 + 1', 'x', 'w*0', '(w)'])
def test_parse_rejects_malformed_text(text):
    with pytest.raises(OrdinalParseError):
        parse_ordinal(text)


# ============================================================================
# ARITHMETIC AND COMPARISON
# ============================================================================

@pytest.mark.parametrize('a, b, expected', [
    ('w', 'w', Comparison.EQUAL),
    ('w^(w)', 'w*3', Comparison.GREATER),
    ('0', 'eps0', Comparison.LESS),
    ('w + 5', 'w*2', Comparison.LESS),
    ('w^(w^(w))', 'w^(w^(5))*9', Comparison.GREATER),
])
def test_compare_examples(a, b, expected):
    assert compare(w(a), w(b)) is expected


def test_compare_is_a_total_order_on_random_notations():
    rng = random.Random(7)
    values = [random_ordinal(rng, 4) for _ in range(60)]
    for a in values:
        for b in values:
            c = compare(a, b)
            assert (c is Comparison.EQUAL) == (a == b)
            assert compare(b, a) is {Comparison.LESS: Comparison.GREATER,
                                     Comparison.GREATER: Comparison.LESS,
                                     Comparison.EQUAL: Comparison.EQUAL}[c]
    ordered = sorted(values)
    for x, y, z in zip(ordered, ordered[1:], ordered[2:]):
        assert x <= y <= z and x <= z


def test_addition_absorbs_smaller_terms():
    assert add(ONE, OMEGA) == OMEGA
    assert format_ordinal(add(OMEGA, ONE)) == 'w + 1'
    assert add(w('w^(2) + w'), w('w^(2)')) == w('w^(2)*2')


def test_successor_and_predecessor():
    assert predecessor(successor(OMEGA)) == OMEGA
    assert successor(nat(4)) == nat(5)
    with pytest.raises(OrdinalError):
        predecessor(OMEGA)


def test_kind_predicates():
    assert ZERO.is_zero and not ZERO.is_limit and not ZERO.is_successor
    assert nat(3).is_successor and nat(3).is_finite
    assert OMEGA.is_limit and not OMEGA.is_finite
    assert EPSILON_ZERO.is_limit


def test_eps0_is_not_an_operand():
    with pytest.raises(OrdinalError):
        add(EPSILON_ZERO, ONE)
    with pytest.raises(OrdinalError):
        omega_power(EPSILON_ZERO)


def test_omega_tower():
    assert omega_tower(ONE, 0) == ONE
    assert omega_tower(ONE, 1) == OMEGA
    assert format_ordinal(omega_tower(ONE, 3)) == 'w^(w^(w))'
    with pytest.raises(OrdinalError):
        omega_tower(ONE, 10_000)


# ============================================================================
# FUNDAMENTAL SEQUENCES
# ============================================================================

@pytest.mark.parametrize('a, n, expected', [
    ('0', 4, '4'),
    ('w + 1', 9, 'w'),
    ('w', 3, '4'),
    ('w^(2)', 2, 'w*3'),
    ('w^(w)', 2, 'w^(3)'),
    ('w^(w)*2', 1, 'w^(w) + w^(2)'),
    ('eps0', 0, 'w'),
    ('eps0', 3, 'w^(w^(w^(w)))'),
])
def test_fund_seq_clauses(a, n, expected):
    assert format_ordinal(fund_seq(w(a), n)) == expected


def test_fund_seq_on_generated_suite():
    rng = random.Random(2024)
    cases = 0
    while cases < 200:
        a = random_ordinal(rng, 3)
        if a.is_zero:
            continue
        n = rng.randint(0, 6)
        lower = fund_seq(a, n)
        assert lower < a
        if a.is_successor:
            assert lower == predecessor(a)
        else:
            assert lower < fund_seq(a, n + 1)
        cases += 1


# ============================================================================
# STEP-DOWN
# ============================================================================

def test_three_below_omega_at_two():
    outcome = step_down(OMEGA, nat(3), 2, BUDGET)
    assert isinstance(outcome, Reached)
    assert outcome.path.expand() == (OMEGA, nat(3))
    assert strictly_below(nat(3), OMEGA, 2, BUDGET) is True


def test_four_is_not_on_the_two_path_of_omega():
    outcome = step_down(OMEGA, nat(4), 2, BUDGET)
    assert isinstance(outcome, NotOnPath)
    assert outcome.last == nat(3)
    assert strictly_below(nat(4), OMEGA, 2, BUDGET) is False


def test_worked_descent_chain_at_x_zero():
    chain = [omega_tower(ONE, 3), w('w^(w + 1)'), w('w^(w)*3'), w('w^(w)*2 + 1')]
    for upper, lower in zip(chain, chain[1:]):
        outcome = step_down(upper, lower, 2, BUDGET)
        assert isinstance(outcome, Reached), format_ordinal(lower)
        assert outcome.path.steps[0] == upper and outcome.path.steps[-1] == lower


def test_tail_skips_expand_to_single_steps():
    outcome = step_down(w('w + 5'), OMEGA, 3, BUDGET)
    expanded = outcome.path.expand()
    assert expanded[0] == w('w + 5') and expanded[-1] == OMEGA
    assert len(expanded) == 6
    for prev, nxt in zip(expanded, expanded[1:]):
        assert fund_seq(prev, 3) == nxt


def test_step_down_is_irreflexive_but_reaches_itself_trivially():
    outcome = step_down(OMEGA, OMEGA, 2, BUDGET)
    assert isinstance(outcome, Reached) and outcome.path.is_trivial()
    assert strictly_below(OMEGA, OMEGA, 2, BUDGET) is False
    assert reached_or_equal(OMEGA, OMEGA, 2, BUDGET) is True


def test_step_down_needs_target_below_start():
    with pytest.raises(OrdinalError):
        step_down(nat(3), OMEGA, 2, BUDGET)


def test_step_down_budget():
    outcome = step_down(w('w^(w)'), nat(1), 2, 1)
    assert isinstance(outcome, BudgetExhausted)
    assert strictly_below(nat(1), w('w^(w)'), 2, 1) is None


# ============================================================================
# MESHING
# ============================================================================

@pytest.mark.parametrize('b, a, expected', [
    ('0', 'w^(w)', True),
    ('w^(w)', '5', True),
    ('w^(2)', 'w + 1', True),
    ('w', 'w^(2)', False),
    ('w^(w) + w', 'w^(3)', False),
])
def test_mesh(b, a, expected):
    assert mesh(w(b), w(a)) is expected


# ============================================================================
# PROPERTIES ON GENERATED NOTATIONS
# ============================================================================

def test_addition_is_associative_with_zero_as_unit():
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = (random_ordinal(rng, 3) for _ in range(3))
        assert add(add(a, b), c) == add(a, add(b, c))
        assert add(ZERO, a) == a == add(a, ZERO)


def test_fund_seq_climbs_towards_limits():
    rng = random.Random(11)
    limits = [EPSILON_ZERO]
    while len(limits) < 50:
        a = random_ordinal(rng, 3)
        if not a.is_zero and not a.is_successor:
            limits.append(a)
    for a in limits:
        members = [fund_seq(a, n) for n in range(5)]
        assert all(m < a for m in members)
        assert all(x < y for x, y in zip(members, members[1:]))


def test_step_down_is_additive_over_meshing_prefixes():
    rng = random.Random(5)
    cases = 0
    while cases < 100:
        b, a = random_ordinal(rng, 2), random_ordinal(rng, 2)
        if a.is_zero or not mesh(b, a):
            continue
        k = rng.randint(1, 3)
        lower = a
        for _ in range(rng.randint(1, 3)):
            if lower.is_zero:
                break
            lower = fund_seq(lower, k)
        assert isinstance(step_down(a, lower, k, BUDGET), Reached)
        outcome = step_down(add(b, a), add(b, lower), k, BUDGET)
        assert isinstance(outcome, Reached), (format_ordinal(b), format_ordinal(a))
        cases += 1


def test_step_down_answers_do_not_change_with_more_budget():
    rng = random.Random(3)
    for _ in range(100):
        b = random_ordinal(rng, 2)
        a = random_ordinal(rng, 2)
        if a > b:
            a, b = b, a
        k = rng.randint(0, 3)
        answers = [strictly_below(a, b, k, budget) for budget in (1, 10, 100, BUDGET)]
        for small, large in zip(answers, answers[1:]):
            if small is not None:
                assert large == small


def test_budget_counts_waypoints_not_single_steps():
    # one tail skip covers five fundamental-sequence steps
    outcome = step_down(w('w + 5'), OMEGA, 3, 1)
    assert isinstance(outcome, Reached)
    assert len(outcome.path.steps) == 2
    assert len(outcome.path.expand()) == 6
