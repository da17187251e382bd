"""
Lemmas behind the jump and F-graph templates

Every lemma is a closed proof built through the tactic layer and cached per
parameter tuple. The jump lemmas state (A1 /\\ ... /\\ An) -> G and are applied
with use_lemma; the theta lemmas are small curried implications.

- theta_elim:        theta(s, t) -> (R(s) -> R(t))
- theta_witness:     literals for R(s), R(t) -> theta(s, t)
- theta_from_false:  ~R(s) -> theta(s, t)
- jump_step:         Prog(R), J'(g), R below b  =>  R below b ++ wp(g)
- jump_induction:    the same hypotheses  =>  all x: R below b ++ wm(g, x)
- jump_at:           Prog(R), all c < a J'(c), R below b  =>  J'(a) at b
- jump_refute:       ~(J'(a) at b) -> R below b
- jump_progressive:  Prog(R) -> Prog(g-hat J'[R])
- feps_progressive:  Prog(g-hat all x ex y F(g, x, y))
"""

from functools import lru_cache
import logging

from syntax import (
    Term, Formula, PredicateAbstract, Succ, OAdd, WPow, WMul, Fund,
    Eq, Prec, RApp, FGraph, IGraph, Not, And, Imp, Exists,
    ZERO_T, ONE_T, R_ABSTRACT, JUMP_SINGLE, apply, subst, fresh_var,
    build_prog, build_theta, feps_down_abstract,
)
from kernel import (
    Derivation, HilbertProof, TacticError,
    implication_chain, forall_instantiate, refl, sym, rewrite,
    weaken, imp_apply, and_intro, and_left, and_right, or_cases, ex_elim,
    sym_imp, explode, classical, excluded_middle, assume, conjoin, use_lemma, close,
    identity,
)

logger = logging.getLogger(__name__)

PROG = build_prog(R_ABSTRACT)
PROG_JUMP = build_prog(JUMP_SINGLE)


def below_r(t: Term) -> Formula:
    """all b (b < t -> R(b)), the premise of Prog(R) at t"""
    return subst(PROG.body, PROG.var, t).left


def jump_hypothesis(a: Term) -> Formula:
    """all b (b < a -> J'(b)), the premise of Prog(J') at a"""
    return subst(PROG_JUMP.body, PROG_JUMP.var, a).left


def jump_instance(a: Term, b: Term) -> Exists:
    """J'(a) with its outer quantifier instantiated at b"""
    j = apply(JUMP_SINGLE, a)
    return subst(j.body, j.var, b)


def _at(body_of, avoid) -> PredicateAbstract:
    w = fresh_var('w', avoid)
    return PredicateAbstract(w, body_of(w))


# ============================================================================
# THETA
# ============================================================================

def _theta_parts(s: Term, t: Term):
    theta = build_theta(s, t)
    v0 = theta.var
    v1 = theta.body.var
    return theta, v0, v1, theta.body.body


@lru_cache(maxsize=None)
def theta_elim(s: Term, t: Term) -> HilbertProof:
    """theta(s, t) -> (R(s) -> R(t))"""
    theta, v0, v1, conj = _theta_parts(s, t)
    clause, gate = conj.left, conj.right
    d = Derivation()
    h = d.hyp(conj)
    rs = d.hyp(RApp(s))
    c = and_left(d, h)
    opened = and_right(d, h)

    same_s = refl(d, s)
    at_s = forall_instantiate(d, c, s)
    case_s = d.mp(same_s, d.axiom('L_OR_I1', A=Eq(s, s), B=Eq(s, t)))
    iff_s = d.mp(case_s, at_s)
    sel_s = d.mp(rs, d.mp(iff_s, d.axiom('L_IFF_E1', A=RApp(s), B=d.formula(iff_s).right)))
    first = d.mp(same_s, and_left(d, sel_s))
    second = d.mp(first, opened)

    at_t = forall_instantiate(d, c, t)
    case_t = d.mp(refl(d, t), d.axiom('L_OR_I2', A=Eq(t, s), B=Eq(t, t)))
    iff_t = d.mp(case_t, at_t)
    sel_t = and_intro(d, weaken(d, first, Eq(t, s)), weaken(d, second, Eq(t, t)))
    back = d.mp(iff_t, d.axiom('L_IFF_E2', A=RApp(t), B=d.formula(iff_t).right))
    d.mp(sel_t, back)

    d, last = close(d, 2)
    inner = ex_elim(d, last, v1)
    ex_elim(d, inner, v0)
    return d.to_proof()


def _literal(t: Term, holds: bool) -> Formula:
    return RApp(t) if holds else Not(RApp(t))


def _selector_iff(d: Derivation, u: Term, holds_u: bool, lit_u: int,
                  slots, lits) -> int:
    """R(u) <-> ((u = s -> w0 = 1) /\\ (u = t -> w1 = 1)) for u among s, t"""
    conjuncts = [Imp(Eq(u, p), Eq(w, ONE_T)) for p, w in slots]
    rhs = And(conjuncts[0], conjuncts[1])
    if holds_u:
        parts = []
        for (p, w), conjunct in zip(slots, conjuncts):
            if w is ONE_T:
                parts.append(weaken(d, refl(d, ONE_T), conjunct.left))
                continue
            transport = d.axiom('E_SUBST', s=u, t=p, P=R_ABSTRACT)
            reaches = imp_apply(d, transport, lit_u)
            refuted = d.mp(lits[p], d.axiom('L_EFQ', A=RApp(p), B=Eq(ZERO_T, ONE_T)))
            parts.append(implication_chain(d, reaches, refuted))
        both = and_intro(d, parts[0], parts[1])
        forward = weaken(d, both, RApp(u))
        backward = weaken(d, lit_u, rhs)
    else:
        forward = d.mp(lit_u, d.axiom('L_EFQ', A=RApp(u), B=rhs))
        side = 'L_AND_E1' if slots[0][0] is u else 'L_AND_E2'
        pick = d.axiom(side, A=conjuncts[0], B=conjuncts[1])
        absurd = imp_apply(d, pick, refl(d, u))
        backward = implication_chain(d, absurd, explode(d, RApp(u)))
    iff = d.axiom('L_IFF_I', A=RApp(u), B=rhs)
    return d.mp(backward, d.mp(forward, iff))


@lru_cache(maxsize=None)
def theta_witness(s: Term, t: Term, holds_s: bool, holds_t: bool) -> HilbertProof:
    """
    lit(s) -> (lit(t) -> theta(s, t)) with lit(u) = R(u) or ~R(u)

    The witnesses are v0 = [holds_s], v1 = [holds_t]; R(s) with ~R(t) has
    no witness.
    """
    if holds_s and not holds_t:
        raise TacticError("theta(s, t) does not follow from R(s) and ~R(t)")
    if s is t and holds_s != holds_t:
        raise TacticError("contradictory literals for the same term")
    theta, v0, v1, conj = _theta_parts(s, t)
    w0 = ONE_T if holds_s else ZERO_T
    w1 = ONE_T if holds_t else ZERO_T
    half = subst(conj, v0, w0)
    filled = subst(half, v1, w1)
    clause = filled.left
    z = clause.var
    selector = PredicateAbstract(z, clause.body.right)

    d = Derivation()
    hs = d.hyp(_literal(s, holds_s))
    ht = d.hyp(_literal(t, holds_t))
    lits = {s: hs, t: ht}
    slots = ((s, w0), (t, w1))

    cases = []
    for u, holds_u, lit_u in ((s, holds_s, hs), (t, holds_t, ht)):
        iff = _selector_iff(d, u, holds_u, lit_u, slots, lits)
        move = d.axiom('E_SUBST', s=u, t=z, P=selector)
        cases.append(implication_chain(d, sym_imp(d, z, u), imp_apply(d, move, iff)))
    every = d.gen(or_cases(d, cases[0], cases[1]), z)

    if w1 is ONE_T:
        gate = weaken(d, refl(d, ONE_T), Eq(w0, ONE_T))
    else:
        gate = identity(d, Eq(ZERO_T, ONE_T))
    body = and_intro(d, every, gate)
    inner = d.mp(body, d.axiom('Q_EX_INTRO', v=v1, A=half, t=w1))
    d.mp(inner, d.axiom('Q_EX_INTRO', v=v0, A=theta.body, t=w0))

    d, _ = close(d, 2)
    return d.to_proof()


@lru_cache(maxsize=None)
def theta_from_false(s: Term, t: Term) -> HilbertProof:
    """~R(s) -> theta(s, t), by cases on R(t)"""
    d = Derivation()
    pos = d.include_proof(theta_witness(s, t, False, True))
    neg = d.include_proof(theta_witness(s, t, False, False))
    h = d.hyp(Not(RApp(s)))
    both = or_cases(d, d.mp(h, pos), d.mp(h, neg))
    d.mp(excluded_middle(d, RApp(t)), both)
    d, _ = close(d)
    return d.to_proof()


# ============================================================================
# JUMP
# ============================================================================

def _r_at(d: Derivation, prog: int, below: int, t: Term) -> int:
    """R(t) from Prog(R) and R below t"""
    return d.mp(below, forall_instantiate(d, prog, t))


def _r_if_equal(d: Derivation, r_t: int, e: Term, t: Term) -> int:
    """e = t -> R(e) from R(t)"""
    transport = d.axiom('E_SUBST', s=t, t=e, P=R_ABSTRACT)
    return imp_apply(d, implication_chain(d, sym_imp(d, e, t), transport), r_t)


@lru_cache(maxsize=None)
def jump_step(gamma: Term, beta: Term) -> HilbertProof:
    """
    (Prog(R) /\\ (J'(gamma) /\\ R below beta)) -> R below (beta ++ wp(gamma))

    J'(gamma) at beta gives some e <= beta with theta(e, d) for every d below
    beta ++ wp(gamma); R(e) holds either way, and theta carries it to d.
    """
    witnessed = jump_instance(gamma, beta)
    e, w = witnessed.var, witnessed.body
    target = below_r(OAdd(beta, WPow(gamma)))
    delta = target.var

    d = Derivation()
    elim = d.include_proof(theta_elim(e, delta))
    _, (prog, jump, below) = assume(d, [PROG, apply(JUMP_SINGLE, gamma), below_r(beta)])
    opened = forall_instantiate(d, jump, beta)
    lower = forall_instantiate(d, below, e)
    equal = _r_if_equal(d, _r_at(d, prog, below, beta), e, beta)

    hw = d.hyp(w)
    r_e = d.mp(and_left(d, hw), or_cases(d, lower, equal))
    each = forall_instantiate(d, and_right(d, hw), delta)
    carried = imp_apply(d, implication_chain(d, each, elim), r_e)
    d.gen(carried, delta)
    d, last = close(d)

    d.mp(opened, ex_elim(d, last, e))
    d, _ = close(d)
    return d.to_proof()


@lru_cache(maxsize=None)
def jump_induction(g: Term, b: Term) -> HilbertProof:
    """
    (Prog(R) /\\ (J'(g) /\\ R below b)) -> all x R below (b ++ wm(g, x))

    Induction on x; the step is jump_step at b ++ wm(g, x) followed by
    (b ++ wm(g, S(x))) = ((b ++ wm(g, x)) ++ wp(g)).
    """
    x = fresh_var('x', g.fv | b.fv)
    ind = PredicateAbstract(x, below_r(OAdd(b, WMul(g, x))))
    at = _at(below_r, g.fv | b.fv)

    d = Derivation()
    _, (prog, jump, below) = assume(d, [PROG, apply(JUMP_SINGLE, g), below_r(b)])

    hx = d.hyp(apply(ind, x))
    further = use_lemma(d, jump_step(g, OAdd(b, WMul(g, x))), [prog, jump, hx])
    mesh = sym(d, d.axiom('O_MESH_SUCC', b=b, g=g, x=x))
    rewrite(d, mesh, further, at)
    d, last = close(d)
    step = d.gen(last, x)

    start = sym(d, d.axiom('O_MESH_ZERO', b=b, g=g))
    base = rewrite(d, start, below, at)
    both = and_intro(d, base, step)
    d.mp(both, d.axiom('PA_INDUCTION', P=ind))
    d, _ = close(d)
    return d.to_proof()


@lru_cache(maxsize=None)
def jump_at(a: Term, b: Term) -> HilbertProof:
    """
    (Prog(R) /\\ (all c < a J'(c) /\\ R below b)) -> J'(a) at b, witness b

    Every d < b ++ wp(a) is below b, equal to b, or below b ++ wm(g, x) for
    some g < a; in each case R(d), so theta(b, d).
    """
    body = jump_instance(a, b)
    e = body.var
    bound_all = body.body.right
    delta = bound_all.var

    d = Derivation()
    decomp = d.axiom('O_DECOMP', d=delta, b=b, a=a)
    some_g = d.formula(decomp).right.right.right
    g = some_g.var
    k = some_g.body
    some_x = k.right
    x = some_x.var
    witness = d.include_proof(theta_witness(b, delta, True, True))
    _, (prog, ih, below) = assume(d, [PROG, jump_hypothesis(a), below_r(b)])

    r_b = _r_at(d, prog, below, b)
    lower = forall_instantiate(d, below, delta)
    equal = _r_if_equal(d, r_b, delta, b)

    hk = d.hyp(k)
    jump_g = d.mp(and_left(d, hk), forall_instantiate(d, ih, g))
    every_x = use_lemma(d, jump_induction(g, b), [prog, jump_g, below])
    at_x = forall_instantiate(d, forall_instantiate(d, every_x, x), delta)
    d.mp(and_right(d, hk), ex_elim(d, at_x, x))
    d, last = close(d)
    higher = ex_elim(d, last, g)

    cases = or_cases(d, lower, or_cases(d, equal, higher))
    r_delta = implication_chain(d, decomp, cases)
    thetas = implication_chain(d, r_delta, d.mp(r_b, witness))
    every_delta = d.gen(thetas, delta)

    reflexive = d.mp(refl(d, b), d.axiom('L_OR_I2', A=Prec(b, b), B=Eq(b, b)))
    filled = and_intro(d, reflexive, every_delta)
    d.mp(filled, d.axiom('Q_EX_INTRO', v=e, A=body.body, t=b))
    d, _ = close(d)
    return d.to_proof()


@lru_cache(maxsize=None)
def jump_refute(a: Term, b: Term) -> HilbertProof:
    """~(J'(a) at b) -> R below b: a failing e < b would itself be a witness"""
    body = jump_instance(a, b)
    e = body.var
    bound_all = body.body.right
    delta = bound_all.var

    d = Derivation()
    from_false = d.include_proof(theta_from_false(e, delta))
    hn = d.hyp(Not(body))
    hb = d.hyp(Prec(e, b))
    near = d.mp(hb, d.axiom('L_OR_I1', A=Prec(e, b), B=Eq(e, b)))

    hr = d.hyp(Not(RApp(e)))
    theta = d.mp(hr, from_false)
    every = d.gen(weaken(d, theta, bound_all.body.left), delta)
    found = d.mp(and_intro(d, near, every), d.axiom('Q_EX_INTRO', v=e, A=body.body, t=e))
    absurd = d.mp(hn, d.axiom('L_EFQ', A=body, B=RApp(e)))
    d.mp(found, absurd)
    d, last = close(d)
    classical(d, last)

    d, last = close(d)
    d.gen(last, e)
    d, _ = close(d)
    return d.to_proof()


@lru_cache(maxsize=None)
def jump_progressive() -> HilbertProof:
    """
    Prog(R) -> Prog(g-hat J'[R])

    For a with J' below a and any b: if R holds below b, jump_at gives J'(a)
    at b; otherwise jump_refute does. The two cases close classically.
    """
    a = PROG_JUMP.var
    jump_a = PROG_JUMP.body.right
    b = jump_a.var

    d = Derivation()
    at = d.include_proof(jump_at(a, b))
    refute = d.include_proof(jump_refute(a, b))
    hp = d.hyp(PROG)
    hi = d.hyp(jump_hypothesis(a))

    hq = d.hyp(below_r(b))
    d.mp(conjoin(d, [hp, hi, hq]), at)
    d, last = close(d)
    settled = classical(d, implication_chain(d, refute, last))
    d.gen(settled, b)

    d, last = close(d)
    d.gen(last, a)
    d, _ = close(d)
    logger.debug("jump observation: %d lines", len(d))
    return d.to_proof()


# ============================================================================
# F-GRAPH
# ============================================================================

@lru_cache(maxsize=None)
def iterate_total(c: Term, x: Term) -> HilbertProof:
    """(all x ex y F(c, x, y)) -> all i ex y I(c, i, x, y), by induction on i"""
    total = apply(feps_down_abstract(), c)
    i = fresh_var('x', c.fv | x.fv)
    y = fresh_var('y', c.fv | x.fv | {i})
    reach = PredicateAbstract(i, Exists(y, IGraph(c, i, x, y)))

    d = Derivation()
    ht = d.hyp(total)
    start = d.axiom('F_ITER_ZERO', a=c, x=x)
    base = d.mp(start, d.axiom('Q_EX_INTRO', v=y, A=IGraph(c, ZERO_T, x, y), t=x))

    hi = d.hyp(IGraph(c, i, x, y))
    next_value = forall_instantiate(d, ht, y)
    z = d.formula(next_value).var
    hf = d.hyp(FGraph(c, y, z))
    iterate = d.axiom('F_ITER_SUCC', a=c, i=i, x=x, y=y, z=z)
    longer = d.mp(hf, d.mp(hi, iterate))
    d.mp(longer, d.axiom('Q_EX_INTRO', v=y, A=IGraph(c, Succ(i), x, y), t=z))
    d, last = close(d)
    d.mp(next_value, ex_elim(d, last, z))
    d, last = close(d)
    step = d.gen(ex_elim(d, last, y), i)

    d.mp(and_intro(d, base, step), d.axiom('PA_INDUCTION', P=reach))
    d, _ = close(d)
    return d.to_proof()


@lru_cache(maxsize=None)
def feps_progressive() -> HilbertProof:
    """
    Prog(g-hat all x ex y F(g, x, y))

    By cases on a: zero, successor c ++ 1 (iterate F_c x + 1 times) and limit
    (F_a(x) = F_fs(a, x)(x) with fs(a, x) < a).
    """
    psi = feps_down_abstract()
    prog = build_prog(psi)
    a = prog.var
    hypothesis, goal = prog.body.left, prog.body.right
    x = goal.var
    value = goal.body
    y = value.var
    at_index = _at(lambda w: Exists(y, FGraph(w, x, y)), {a, x, y})

    d = Derivation()
    cases = d.axiom('O_CASES', a=a)
    successor, limit = d.formula(cases).right.left, d.formula(cases).right.right
    c = successor.var

    at_zero = d.mp(d.axiom('F_ZERO', t=x),
                   d.axiom('Q_EX_INTRO', v=y, A=FGraph(ZERO_T, x, y), t=Succ(x)))
    move = d.axiom('E_SUBST', s=ZERO_T, t=a, P=at_index)
    zero_case = implication_chain(d, sym_imp(d, a, ZERO_T), imp_apply(d, move, at_zero))

    iterated = d.include_proof(iterate_total(c, x))
    hh = d.hyp(hypothesis)

    hk = d.hyp(successor.body)
    total_c = d.mp(and_left(d, hk), forall_instantiate(d, hh, c))
    reach = forall_instantiate(d, d.mp(total_c, iterated), Succ(x))
    hi = d.hyp(IGraph(c, Succ(x), x, y))
    lifted = d.mp(hi, d.axiom('F_SUCC', a=c, x=x, y=y))
    landed = rewrite(d, sym(d, and_right(d, hk)), lifted,
                     _at(lambda w: FGraph(w, x, y), {a, c, x, y}))
    d.mp(landed, d.axiom('Q_EX_INTRO', v=y, A=FGraph(a, x, y), t=y))
    d, last = close(d)
    d.mp(reach, ex_elim(d, last, y))
    d, last = close(d)
    successor_case = ex_elim(d, last, c)

    hl = d.hyp(limit)
    smaller = d.mp(hl, d.axiom('O_FS_BELOW', a=a, x=x))
    total_fs = d.mp(smaller, forall_instantiate(d, hh, Fund(a, x)))
    at_x = forall_instantiate(d, total_fs, x)
    hf = d.hyp(FGraph(Fund(a, x), x, y))
    unfolded = d.mp(hf, d.mp(hl, d.axiom('F_LIM', a=a, x=x, y=y)))
    d.mp(unfolded, d.axiom('Q_EX_INTRO', v=y, A=FGraph(a, x, y), t=y))
    d, last = close(d)
    d.mp(at_x, ex_elim(d, last, y))
    d, limit_case = close(d)

    split = or_cases(d, zero_case, or_cases(d, successor_case, limit_case))
    d.gen(d.mp(cases, split), x)
    d, last = close(d)
    d.gen(last, a)
    logger.debug("F-graph progressiveness: %d lines", len(d))
    return d.to_proof()
