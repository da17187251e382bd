"""
Fixed proof templates compiled once through the tactic layer

- jump template: all x (TI(tw(x), J'[R]) -> TI(tw((x + S(0))), R))        [pa-o]
- base proof:    TI(tw(0), R)                                            [pa-o]
- lemma:         all x (TI(tw((x + S(0))), F-down) -> F_eps0(x) down)    [pa-o-f]

Neither template assumes progressiveness of its target: the jump template
derives Prog(R) -> Prog(J'[R]) in gentzen.lemmas from the ordinal pack, the
lemma derives Prog(F-down) from the defining clauses of the hierarchy.
"""

from functools import lru_cache
import hashlib
import logging

from syntax import (
    Var, Tower, Prec, RApp, FGraph, PredicateAbstract,
    ZERO_T, ONE_T, EPS0_T, Add, WPow, JUMP_SINGLE,
    build_ti, feps_down_abstract,
)
from kernel import (
    Derivation, HilbertProof, render_proof, forall_instantiate, rewrite,
    conjoin, ex_elim, close,
)
from gentzen.lemmas import PROG, below_r, jump_progressive, jump_step, feps_progressive

logger = logging.getLogger(__name__)

X = Var('x', 0)
X1 = Var('x', 1)
Y0 = Var('y', 0)
B0 = Var('b', 0)
Z0 = Var('z', 0)


def _nothing_below_zero(d: Derivation) -> int:
    """all b (b < 0 -> R(b)), vacuously"""
    not_below = d.axiom('O_ZERO_MIN', t=B0)
    efq = d.axiom('L_EFQ', A=Prec(B0, ZERO_T), B=RApp(B0))
    return d.gen(d.mp(not_below, efq), B0)


def _zero_case(d: Derivation, prog: int) -> int:
    """R(0) from Prog(R)"""
    return d.mp(_nothing_below_zero(d), forall_instantiate(d, prog, ZERO_T))


@lru_cache(maxsize=None)
def jump_template() -> HilbertProof:
    """
    all x (TI(tw(x), g-hat J'[R]) -> TI(tw((x + S(0))), g-hat R(g)))

    Prog(J'[R]) follows from Prog(R); with J' below tw(x) it gives J'(tw(x)).
    Its instance at b = 0, where R below 0 holds vacuously, is R below
    0 ++ wp(tw(x)) = tw(x + 1).
    """
    tx = Tower(X)
    d = Derivation()
    observation = d.include_proof(jump_progressive())
    step = d.include_proof(jump_step(tx, ZERO_T))
    h1 = d.hyp(build_ti(tx, JUMP_SINGLE))
    h2 = d.hyp(PROG)

    prog_j = d.mp(h2, observation)
    below_tx = d.mp(prog_j, h1)
    j_tx = d.mp(below_tx, forall_instantiate(d, prog_j, tx))
    q_zero = _nothing_below_zero(d)
    below_sum = d.mp(conjoin(d, [h2, j_tx, q_zero]), step)

    target = PredicateAbstract(Z0, below_r(Z0))
    below_wp = rewrite(d, d.axiom('O_ZERO_ADD', t=WPow(tx)), below_sum, target)
    rewrite(d, d.axiom('O_TOWER_SUCC', t=X), below_wp, target)

    d, last = close(d, 2)
    d.gen(last, X)
    logger.debug("jump template: %d lines", len(d))
    return d.to_proof()


@lru_cache(maxsize=None)
def base_proof() -> HilbertProof:
    """TI(tw(0), g-hat R(g)): tw(0) = 1 and b < 1 forces b = 0"""
    d = Derivation()
    prog = d.hyp(PROG)
    below = d.hyp(Prec(B0, Tower(ZERO_T)))

    tower_zero = d.axiom('O_TOWER_ZERO')
    below_one = rewrite(d, tower_zero, below, PredicateAbstract(Z0, Prec(B0, Z0)))
    is_zero = d.mp(below_one, d.axiom('O_BELOW_ONE', t=B0))
    r_zero = _zero_case(d, prog)
    rewrite(d, is_zero, r_zero, PredicateAbstract(Z0, RApp(Z0)))

    d, lifted = d.discharge(below)
    d.gen(lifted, B0)
    d, _ = d.discharge(prog)
    return d.to_proof()


@lru_cache(maxsize=None)
def lemma_template() -> HilbertProof:
    """all x (TI(tw((x + S(0))), g-hat F_g down) -> ex y F([eps0], x, y))"""
    psi = feps_down_abstract()
    t = Tower(Add(X1, ONE_T))
    d = Derivation()
    prog = d.include_proof(feps_progressive())
    h = d.hyp(build_ti(t, psi))

    below_t = d.mp(prog, h)
    total = d.mp(below_t, forall_instantiate(d, prog, t))
    at_x = forall_instantiate(d, total, X1)

    hf = d.hyp(FGraph(t, X1, Y0))
    at_eps = d.mp(hf, d.axiom('F_EPS', t=X1, y=Y0))
    d.mp(at_eps, d.axiom('Q_EX_INTRO', v=Y0, A=FGraph(EPS0_T, X1, Y0), t=Y0))
    d, last = close(d)
    d.mp(at_x, ex_elim(d, last, Y0))

    d, last = close(d)
    d.gen(last, X1)
    logger.debug("lemma template: %d lines", len(d))
    return d.to_proof()


def digest(p: HilbertProof) -> str:
    """sha256 of the rendered proof file"""
    return hashlib.sha256(render_proof(p).encode('utf-8')).hexdigest()


def template_digests() -> dict:
    return {
        'jump_template': digest(jump_template()),
        'base_proof': digest(base_proof()),
        'lemma_template': digest(lemma_template()),
    }
