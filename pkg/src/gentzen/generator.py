"""
Generation of TI(omega_n, R) and F_eps0(n) down proofs

gen_ti(n) substitutes g-hat J'_k[R] into the jump template for each level
k = n-1 .. 0, instantiates x := num(n-k-1), repairs the numeral with
numeral_succ, and chains the levels down to the base proof of TI(tw(0), .).
"""

from functools import lru_cache
import logging

from syntax import (
    PredicateAbstract, Var, Tower, Add, Eq, And,
    ONE_T, R_ABSTRACT, numeral, build_ti, jump_abstract, feps_down_abstract,
)
from kernel import (
    Derivation, HilbertProof, subst_proof,
    implication_chain, forall_instantiate, refl, sym, rewrite,
)
from gentzen.templates import jump_template, base_proof, lemma_template, Z0
from gentzen.numerals import numeral_succ_into

logger = logging.getLogger(__name__)

A1 = Var('a', 1)


class GenerationError(RuntimeError):
    """A generated proof was rejected by the checker"""


@lru_cache(maxsize=256)
def level_template(k: int) -> HilbertProof:
    """The jump template with R := J'_k"""
    return subst_proof(jump_template(), jump_abstract(k))


@lru_cache(maxsize=256)
def level_base(n: int) -> HilbertProof:
    """TI(tw(0), J'_n)"""
    return subst_proof(base_proof(), jump_abstract(n))


def _level(d: Derivation, n: int, m: int) -> int:
    """
    TI(tw(num m), J'_(n-m)) -> TI(tw(num(m+1)), J'_(n-m-1))

    Level k = n - m - 1 of the chain.
    """
    k = n - m - 1
    psi_k = jump_abstract(k)
    template = d.include_proof(level_template(k))
    level = forall_instantiate(d, template, numeral(m))
    succ = numeral_succ_into(d, m)
    tower_ti = PredicateAbstract(Z0, build_ti(Tower(Z0), psi_k))
    move = d.axiom('E_SUBST', s=Add(numeral(m), ONE_T), t=numeral(m + 1), P=tower_ti)
    repaired = d.mp(succ, move)
    return implication_chain(d, level, repaired)


def ti_into(d: Derivation, n: int, psi: PredicateAbstract = None) -> int:
    """
    Append a proof of TI(tw(num n), R); returns the line of the TI formula

    Args:
        d: derivation to extend
        n: tower height
        psi: optional closed abstract substituted for R afterwards

    Returns:
        index of TI(tw(num n), psi)
    """
    inner = Derivation()
    chain = None
    for m in range(n):
        level = _level(inner, n, m)
        chain = level if chain is None else implication_chain(inner, chain, level)
        logger.debug("gen_ti(%d): level %d of %d", n, n - m - 1, n)
    base = inner.include_proof(level_base(n))
    if chain is not None:
        inner.mp(base, chain)
    proof = inner.to_proof()
    if psi is not None:
        proof = subst_proof(proof, psi)
    return d.include_proof(proof)


def ti_proof(n: int) -> HilbertProof:
    """Proof ending in TI(tw(num n), g-hat R(g))"""
    d = Derivation()
    ti_into(d, n)
    return d.to_proof()


def gen_ti(n: int) -> HilbertProof:
    """
    pa-o proof of ex a1 (tw(num n) = a1 /\\ TI(a1, g-hat R(g)))

    Args:
        n: tower height, n >= 0

    Returns:
        the generated proof
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    d = Derivation()
    ti = ti_into(d, n)
    top = Tower(numeral(n))
    same = refl(d, top)
    conj = d.axiom('L_AND_I', A=d.formula(same), B=d.formula(ti))
    both = d.mp(ti, d.mp(same, conj))
    packed = And(Eq(top, A1), build_ti(A1, R_ABSTRACT))
    intro = d.axiom('Q_EX_INTRO', v=A1, A=packed, t=top)
    d.mp(both, intro)
    return d.to_proof()


def gen_feps_total(n: int) -> HilbertProof:
    """
    pa-o-f proof of ex y F([eps0], num n, y)

    TI(tw(num(n+1)), g-hat F_g down) is gen_ti's chain under the substitution
    R := F-down; the lemma template turns it into totality of F_eps0 at num n.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    d = Derivation()
    ti = ti_into(d, n + 1, feps_down_abstract())
    lemma = d.include_proof(lemma_template())
    at_n = forall_instantiate(d, lemma, numeral(n))

    back = sym(d, numeral_succ_into(d, n))
    tower_ti = PredicateAbstract(Z0, build_ti(Tower(Z0), feps_down_abstract()))
    ti_at_succ = rewrite(d, back, ti, tower_ti)
    d.mp(ti_at_succ, at_n)
    return d.to_proof()
