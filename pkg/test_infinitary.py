"""
Tests for the infinitary engine: Sigma^N truth, proof terms, local
correctness, the reduction walker and its certificates
"""

import random
import sys
import os

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from ordinals import ZERO, ONE, OMEGA, nat, add
from infinitary import (
    NNum, NVar, NApp, Prime, Mem, NotMem, And, Or, ExN, AllN, TermEvaluationError,
    num, mem, not_mem, dual, eval_term, feps_star_total, truth_in_K, is_sigma_n,
    is_sigma_n_sequent, k_of, truth_threshold, format_formula,
    Yes, No, FastGrowing, Surrogate, bounded_by,
    AxZeroN, Accum, RuleOr, OK, Fail, check_node, locally_correct, invert, unfold_inv,
    omega_child,
    ReductionPreconditionError, DominanceCertificate, SequentTrue, LocalError,
    SAME_INPUT_DESCENT, INPUT_BELOW_BOUND, ACCUM_MESH,
    certificate_check, reduce_trace, surrogate_spot_check, trace_spot_check,
    TermFormatError, read_term, write_term,
    worked_chain, worked_chain_mutant, fixture_suite,
)

FIXTURES = {f.name: f for f in fixture_suite()}

FINAL_STEP = {
    'zero-axiom': 0,
    'true-prime': 0,
    'n-chain-3': 3,
    'n-chain-5-offset': 5,
    'and-split': 1,
    'and-choose-left': 1,
    'or-intro': 1,
    'exists-intro': 3,
    'cut-prime': 1,
    'cut-n-low': 1,
    'cut-n-high': 1,
    'feps-cut-false': 2,
    'feps-cut-true': 2,
    'feps-axiom': 1,
}


# ============================================================================
# SIGMA^N TRUTH
# ============================================================================

def test_membership_depends_on_K():
    assert truth_in_K(mem(3), 10)
    assert not truth_in_K(mem(3), 9)
    assert truth_in_K(not_mem(3), 9)


def test_feps_star_terms():
    assert eval_term(NApp('feps*', (num(2),))) == 5
    assert eval_term(NApp('+', (num(2), NApp('S', (num(3),))))) == 6
    with pytest.raises(TermEvaluationError):
        eval_term(NVar('x'))
    with pytest.raises(ValueError):
        NApp('S', (num(1), num(2)))


def test_existential_truth_and_threshold():
    e = feps_star_total(2)
    assert truth_threshold(e) == 16
    assert truth_in_K(e, 16)
    assert not truth_in_K(e, 15)
    assert truth_threshold(feps_star_total(1)) == 10


def test_sequent_shape_and_input():
    assert k_of({not_mem(1), feps_star_total(1)}) == 3
    assert k_of({mem(0)}) == 2
    assert is_sigma_n_sequent({not_mem(2), mem(0), feps_star_total(0)})
    assert not is_sigma_n(AllN(NVar('x'), feps_star_total(NVar('x'))))
    assert not is_sigma_n(not_mem(0))


def test_dual_needs_a_prime_body():
    e = feps_star_total(1)
    assert dual(e) == AllN(e.var, Prime('!=', e.body.left, e.body.right))
    with pytest.raises(ValueError):
        dual(ExN(NVar('y'), mem(0)))


def test_format_formula():
    assert format_formula(feps_star_total(1)) == 'ex y in N feps*(1) = y'
    assert format_formula(Or(not_mem(2), mem(0))) == '(2 notin N \\/ 0 in N)'


def _random_sigma(rng: random.Random, depth: int):
    roll = rng.random()
    if depth == 0 or roll < 0.3:
        if rng.random() < 0.5:
            return mem(rng.randint(0, 5))
        return Prime(rng.choice(['=', '!=']), num(rng.randint(0, 2)), num(rng.randint(0, 2)))
    if roll < 0.55:
        return And(_random_sigma(rng, depth - 1), _random_sigma(rng, depth - 1))
    if roll < 0.8:
        return Or(_random_sigma(rng, depth - 1), _random_sigma(rng, depth - 1))
    y = NVar('y')
    return ExN(y, And(Mem(y), Prime('=', y, num(rng.randint(0, 4)))))


def test_truth_is_monotone_in_K():
    rng = random.Random(17)
    for _ in range(200):
        phi = _random_sigma(rng, 3)
        assert is_sigma_n(phi)
        truths = [truth_in_K(phi, K) for K in range(2, 20)]
        first = truths.index(True) if True in truths else len(truths)
        assert all(truths[first:])


# ============================================================================
# HIERARCHIES
# ============================================================================

@pytest.mark.parametrize('m', range(6))
@pytest.mark.parametrize('n', range(6))
def test_surrogate_closed_form(m, n):
    assert Surrogate().evaluate(nat(m), n) == n + 2 ** (m + 1) - 1


def test_surrogate_limit_and_overflow():
    g = Surrogate()
    assert g.evaluate(OMEGA, 2) == 18
    assert g.evaluate(add(OMEGA, ONE), 2) == 18 + 2 ** 20 + 1
    assert g.evaluate(add(OMEGA, nat(2)), 2) is None


def test_fast_growing_threshold_decisions():
    f = FastGrowing()
    assert isinstance(f.at_least(nat(2), 2, 23), Yes)
    assert f.at_least(nat(2), 2, 24) == No(23)
    assert f.at_least(nat(2), 2, 3) == Yes()
    assert isinstance(f.at_least(add(OMEGA, ONE), 2, 10 ** 6), Yes)


def test_bounded_by():
    gamma = {feps_star_total(2), not_mem(1)}
    assert bounded_by(gamma, FastGrowing(), ONE) == No(7)
    assert isinstance(bounded_by(gamma, FastGrowing(), nat(2)), Yes)
    assert bounded_by({Prime('=', num(1), num(0))}, FastGrowing(), nat(3)) == No()


def test_surrogate_spot_check_on_micro_ordinals():
    report = surrogate_spot_check()
    assert report.ok
    assert report.checked > 0


# ============================================================================
# LOCAL CORRECTNESS
# ============================================================================

def test_worked_chain_is_locally_correct():
    assert locally_correct(worked_chain()) == OK()


def test_mutant_fails_at_the_root():
    verdict = locally_correct(worked_chain_mutant())
    assert isinstance(verdict, Fail)
    assert verdict.path == ()
    assert '<_2' in verdict.reason


@pytest.mark.parametrize('name', sorted(FIXTURES))
def test_fixtures_are_locally_correct(name):
    assert locally_correct(FIXTURES[name].term) == OK()


def test_axiom_height_is_checked():
    bad = AxZeroN({mem(0)}, ONE, 0)
    assert check_node(bad) == 'axioms have height 0'


def test_premise_must_fit():
    disj = Or(Prime('=', num(1), num(0)), mem(0))
    bad = RuleOr({disj}, nat(1), 0, disj, 0, AxZeroN({disj, mem(0)}, ZERO, 0))
    assert check_node(bad) == 'premise does not fit'


def test_omega_children_substitute_the_numeral():
    chain = worked_chain()
    child = omega_child(chain.sub, 4)
    assert child.height == nat(2)
    assert NotMem(num(4)) in child.sub.sequent


def test_unfolding_an_inversion_keeps_sequent_and_height():
    chain = worked_chain()
    total = chain.sub.principal
    inv = invert(chain.sub, total, 3)
    unfolded = unfold_inv(inv)
    assert isinstance(unfolded, Accum)
    assert unfolded.sequent == inv.sequent
    assert unfolded.height == inv.height
    assert unfolded.sub.height == nat(2)


# ============================================================================
# REDUCTION
# ============================================================================

@pytest.mark.parametrize('name', sorted(FIXTURES))
def test_reduction_reaches_a_true_axiom(name):
    fixture = FIXTURES[name]
    trace = reduce_trace(fixture.term, fixture.mu, FastGrowing())
    assert trace.verdict == SequentTrue(FINAL_STEP[name])
    assert len(trace.steps) == FINAL_STEP[name] + 1
    assert all(certificate_check(c, FastGrowing()) for c in trace.certificates())
    assert trace.nonstrict_steps_keep_sequent()
    assert trace_spot_check(trace).ok


def test_equal_input_keeps_the_sequent():
    assert len(FIXTURES) >= 10
    kept = 0
    for fixture in FIXTURES.values():
        trace = reduce_trace(fixture.term, fixture.mu, FastGrowing())
        for cur, nxt in zip(trace.steps, trace.steps[1:]):
            if cur.certificate is not None and not cur.certificate.strict:
                assert cur.k == nxt.k
                assert cur.sequent == nxt.sequent
                kept += 1
    assert kept > 0


def test_reduction_chooses_the_false_conjunct():
    trace = reduce_trace(FIXTURES['and-choose-left'].term, ZERO, FastGrowing())
    assert trace.steps[-1].path == (0,)


def test_n_cut_branches_by_the_bound():
    low = reduce_trace(FIXTURES['cut-n-low'].term, ZERO, FastGrowing())
    assert low.steps[-1].path == (0,)
    assert low.certificates()[0].tag == SAME_INPUT_DESCENT

    high = reduce_trace(FIXTURES['cut-n-high'].term, OMEGA, FastGrowing())
    cert = high.certificates()[0]
    assert high.steps[-1].path == (1,)
    assert cert.tag == INPUT_BELOW_BOUND
    assert (cert.witness, cert.k, cert.k_next) == (1, 2, 3)


def test_feps_cut_inverts_the_universal_premise():
    trace = reduce_trace(FIXTURES['feps-cut-true'].term, OMEGA, FastGrowing())
    tags = [c.tag for c in trace.certificates()]
    assert tags == [INPUT_BELOW_BOUND, ACCUM_MESH]
    first = trace.certificates()[0]
    assert (first.witness, first.k_next) == (5, 15)
    assert not trace.certificates()[1].strict


def test_trace_json_lines():
    trace = reduce_trace(FIXTURES['n-chain-3'].term, ZERO, FastGrowing())
    lines = trace.to_json_lines().splitlines()
    assert len(lines) == 5
    assert '"verdict": "SequentTrue"' in lines[-1]


def test_reduction_preconditions():
    with pytest.raises(ReductionPreconditionError):
        reduce_trace(worked_chain(), ZERO, FastGrowing())
    lifted = Accum({mem(0)}, OMEGA, 0, AxZeroN({mem(0)}, ZERO, 0))
    with pytest.raises(ReductionPreconditionError):
        reduce_trace(lifted, ONE, FastGrowing())
    with pytest.raises(ReductionPreconditionError):
        reduce_trace(AxZeroN({mem(0)}, ZERO, 1), ZERO, FastGrowing())


def test_local_error_is_reported():
    disj = Or(Prime('=', num(1), num(0)), mem(0))
    bad = RuleOr({disj}, nat(1), 0, disj, 1, AxZeroN({disj, mem(0)}, ONE, 0))
    trace = reduce_trace(bad, ZERO, FastGrowing())
    assert isinstance(trace.verdict, LocalError)


def test_certificate_check_rejects_bad_chains():
    assert certificate_check(DominanceCertificate(SAME_INPUT_DESCENT, ZERO, nat(3), nat(2), 2, 2))
    assert not certificate_check(DominanceCertificate(SAME_INPUT_DESCENT, ZERO, nat(3), nat(2), 2, 3))
    assert not certificate_check(DominanceCertificate(SAME_INPUT_DESCENT, ZERO, OMEGA, nat(4), 2, 2))

    assert certificate_check(DominanceCertificate(ACCUM_MESH, OMEGA, ONE, ZERO, 2, 2))
    assert not certificate_check(DominanceCertificate(ACCUM_MESH, ONE, OMEGA, nat(2), 2, 2))

    small = DominanceCertificate(INPUT_BELOW_BOUND, ZERO, nat(2), ONE, 2, 3, 1)
    assert certificate_check(small)
    assert certificate_check(small, FastGrowing())
    large = DominanceCertificate(INPUT_BELOW_BOUND, ZERO, nat(2), ONE, 2, 9, 3)
    assert certificate_check(large)
    assert not certificate_check(large, FastGrowing())
    assert not certificate_check(DominanceCertificate(INPUT_BELOW_BOUND, ZERO, OMEGA, ONE, 2, 3, 1))
    assert not certificate_check(DominanceCertificate(INPUT_BELOW_BOUND, ZERO, nat(2), ONE, 2, 4, 1))


# ============================================================================
# TEXT FORMAT
# ============================================================================

@pytest.mark.parametrize('name', sorted(FIXTURES))
def test_terms_survive_a_round_trip(name):
    term = FIXTURES[name].term
    assert read_term(write_term(term)) == term


def test_worked_chain_text():
    text = write_term(worked_chain())
    assert text.startswith('(accum :h "w" :r 0')
    assert read_term(text) == worked_chain()


@pytest.mark.parametrize('text', [
    '',
    '(accum :h "w" :r 0 :seq ()',
    '(bogus :h "0" :r 0 :seq ())',
    '(ax-zero-n :h "w^" :r 0 :seq ())',
    '(ax-zero-n :r 0 :seq ())',
    '(rule-n :h "1" :r 0 :seq ((in 1)) 0)',
])
def test_malformed_term_text(text):
    with pytest.raises(TermFormatError):
        read_term(text)
