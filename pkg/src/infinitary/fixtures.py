"""
Hand-built proof terms

worked_chain() is the embedding of feps* totality: the feps* axiom, two
disjunction introductions (height 2), the omega-rule (height 3) and an
accumulation to w using 3 <_2 w. fixture_suite() holds rank-0 proofs of
Sigma^N sequents for the reduction walker.
"""

from dataclasses import dataclass
from typing import List

from ordinals import Ordinal, ZERO, ONE, OMEGA, nat, omega_tower
from infinitary.formulas import (
    NVar, NApp, Prime, NotMem, And, Or, ExN, AllN, num, mem, not_mem, instance, dual,
    feps_star_total,
)
from infinitary.terms import (
    ProofTerm, AxTruePrime, AxZeroN, AxNNegPair, AxFepsStar, RuleN, RuleAnd, RuleOr,
    RuleExists, RuleOmega, CutN, CutPrime, CutFepsStar, Accum,
)

N = NVar('n')
X = NVar('x')
Y = NVar('y')

# w_2 = w^w, the smallest offset used with limit heights
OMEGA_2 = omega_tower(ONE, 2)


@dataclass(frozen=True)
class Fixture:
    name: str
    term: ProofTerm
    mu: Ordinal


def feps_star_universal() -> AllN:
    """all x in N ex y in N feps*(x) = y"""
    return AllN(X, feps_star_total(X))


def worked_chain() -> Accum:
    total = feps_star_universal()
    disj = instance(total, N)
    ax = AxFepsStar({NotMem(N), feps_star_total(N)}, ZERO, 0, N)
    first = RuleOr({NotMem(N), disj}, nat(1), 0, disj, 1, ax)
    second = RuleOr({disj}, nat(2), 0, disj, 0, first)
    omega = RuleOmega({total}, nat(3), 0, total, N, second)
    return Accum({total}, OMEGA, 0, omega)


def worked_chain_mutant() -> Accum:
    """Accumulation to w from height 5; fails since {w}(2) = 3"""
    chain = worked_chain()
    raised = Accum(chain.sequent, nat(5), 0, chain.sub)
    return Accum(chain.sequent, OMEGA, 0, raised)


# ============================================================================
# SUITE
# ============================================================================

def zero_axiom() -> ProofTerm:
    return AxZeroN({mem(0)}, ZERO, 0)


def true_prime() -> ProofTerm:
    phi = Prime('=', NApp('+', (num(2), num(2))), num(4))
    return AxTruePrime({phi, not_mem(7)}, ZERO, 0, phi)


def n_chain(m: int) -> ProofTerm:
    """m in N by m applications of the N-rule"""
    h = AxZeroN({mem(0)}, ZERO, 0)
    for j in range(1, m + 1):
        h = RuleN({mem(j)}, nat(j), 0, num(j - 1), h)
    return h


def and_split() -> ProofTerm:
    phi = Prime('=', NApp('+', (num(2), num(2))), num(4))
    conj = And(mem(0), phi)
    left = AxZeroN({conj, mem(0)}, ZERO, 0)
    right = AxTruePrime({conj, phi}, ZERO, 0, phi)
    return RuleAnd({conj}, nat(1), 0, conj, left, right)


def and_choose_left() -> ProofTerm:
    false_prime = Prime('=', num(1), num(0))
    conj = And(false_prime, mem(0))
    gamma = {conj, mem(0)}
    left = AxZeroN(gamma | {false_prime}, ZERO, 0)
    right = AxZeroN(gamma, ZERO, 0)
    return RuleAnd(gamma, nat(1), 0, conj, left, right)


def or_intro() -> ProofTerm:
    disj = Or(Prime('=', num(1), num(0)), mem(0))
    return RuleOr({disj}, nat(1), 0, disj, 1, AxZeroN({disj, mem(0)}, ZERO, 0))


def exists_intro() -> ProofTerm:
    """ex y in N (y + y) = 2 with witness 1"""
    e = ExN(Y, Prime('=', NApp('+', (Y, Y)), num(2)))
    c = instance(e, 1)
    phi = c.right
    ax0 = AxZeroN({e, c, mem(1), mem(0)}, ZERO, 0)
    succ = RuleN({e, c, mem(1)}, nat(1), 0, num(0), ax0)
    prime = AxTruePrime({e, c, phi}, ZERO, 0, phi)
    lifted = Accum({e, c, phi}, nat(1), 0, prime)
    conj = RuleAnd({e, c}, nat(2), 0, c, succ, lifted)
    return RuleExists({e}, nat(3), 0, e, num(1), conj)


def cut_prime() -> ProofTerm:
    phi = Prime('=', num(0), num(1))
    gamma = {mem(0)}
    return CutPrime(gamma, nat(1), 0, phi,
                    AxZeroN(gamma | {phi}, ZERO, 0),
                    AxZeroN(gamma | {Prime('!=', num(0), num(1))}, ZERO, 0))


def cut_n_low() -> ProofTerm:
    gamma = {mem(0)}
    return CutN(gamma, nat(1), 0, num(5),
                AxZeroN(gamma | {mem(5)}, ZERO, 0),
                AxZeroN(gamma | {not_mem(5)}, ZERO, 0))


def cut_n_high() -> ProofTerm:
    gamma = {mem(0), mem(1)}
    return CutN(gamma, nat(1), 0, num(1),
                AxZeroN(gamma, ZERO, 0),
                AxNNegPair(gamma | {not_mem(1)}, ZERO, 0, num(1)))


def feps_cut() -> ProofTerm:
    """
    Cut over ex y in N feps*(2) = y

    The right premise proves all y in N feps*(2) != y by the omega-rule over
    a 0 in N axiom, so inversion can be unfolded at any witness.
    """
    e = feps_star_total(2)
    d = dual(e)
    gamma = {mem(0)}
    left = Accum(gamma | {e}, nat(1), 0, AxZeroN(gamma | {e}, ZERO, 0))
    child = AxZeroN(gamma | {d, instance(d, N)}, ZERO, 0)
    right = RuleOmega(gamma | {d}, nat(1), 0, d, N, child)
    return CutFepsStar(gamma, nat(2), 0, e, left, right)


def feps_axiom_under_or() -> ProofTerm:
    """(1 notin N) side formula with ex y in N feps*(1) = y under a disjunction"""
    e = feps_star_total(1)
    disj = Or(Prime('=', num(0), num(1)), e)
    ax = AxFepsStar({disj, not_mem(1), e}, ZERO, 0, num(1))
    return RuleOr({disj, not_mem(1)}, nat(1), 0, disj, 1, ax)


def fixture_suite() -> List[Fixture]:
    """Locally correct rank-0 proofs of Sigma^N sequents with their offsets"""
    return [
        Fixture('zero-axiom', zero_axiom(), ZERO),
        Fixture('true-prime', true_prime(), OMEGA),
        Fixture('n-chain-3', n_chain(3), ZERO),
        Fixture('n-chain-5-offset', n_chain(5), OMEGA_2),
        Fixture('and-split', and_split(), ZERO),
        Fixture('and-choose-left', and_choose_left(), ZERO),
        Fixture('or-intro', or_intro(), OMEGA),
        Fixture('exists-intro', exists_intro(), ZERO),
        Fixture('cut-prime', cut_prime(), ZERO),
        Fixture('cut-n-low', cut_n_low(), ZERO),
        Fixture('cut-n-high', cut_n_high(), OMEGA),
        Fixture('feps-cut-false', feps_cut(), ZERO),
        Fixture('feps-cut-true', feps_cut(), OMEGA),
        Fixture('feps-axiom', feps_axiom_under_or(), OMEGA_2),
    ]
