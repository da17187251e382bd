"""
Tactic layer: builds Hilbert lines under hypotheses

A Derivation is a proof in progress whose lines may rest on hypotheses.
discharge() is the deduction transform; every combinator emits real axiom,
MP and Gen lines and its size cost is listed in its docstring.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple
import logging

from syntax import (
    Formula, PredicateAbstract, Term, Var, Eq, Not, And, Imp, Forall,
    ZERO_T, ONE_T, alpha_equal, subst_term, fresh_var, apply,
)
from kernel.proof import (
    AxiomInstance, ModusPonens, Generalization, ProofLine, HilbertProof, Justification,
)
from kernel.schemas import THEORIES

logger = logging.getLogger(__name__)

_ALL_SCHEMAS = THEORIES['pa-o-f-false']


class TacticError(ValueError):
    """A combinator was applied to lines of the wrong shape"""


@dataclass(frozen=True)
class Hypothesis:
    pass


@dataclass(frozen=True)
class _Line:
    formula: Formula
    justification: object
    deps: FrozenSet[int]


class Derivation:
    """Lines with 1-based indices; hypothesis lines carry their own index in deps"""

    def __init__(self):
        self.lines: List[_Line] = []

    def __len__(self) -> int:
        return len(self.lines)

    def formula(self, i: int) -> Formula:
        return self.lines[i - 1].formula

    def deps(self, i: int) -> FrozenSet[int]:
        return self.lines[i - 1].deps

    def _append(self, formula: Formula, justification, deps: FrozenSet[int]) -> int:
        self.lines.append(_Line(formula, justification, deps))
        return len(self.lines)

    # ------------------------------------------------------------------------
    # primitive steps
    # ------------------------------------------------------------------------

    def hyp(self, formula: Formula) -> int:
        index = len(self.lines) + 1
        return self._append(formula, Hypothesis(), frozenset((index,)))

    def axiom(self, schema_id: str, **params) -> int:
        schema = _ALL_SCHEMAS.get(schema_id)
        if schema is None:
            raise TacticError(f"unknown schema {schema_id}")
        failure = schema.check_side(**params)
        if failure:
            raise TacticError(f"{schema_id}: {failure}")
        ordered = tuple((name, params[name]) for name, _ in schema.params)
        return self._append(schema.build(**params), AxiomInstance(schema_id, ordered), frozenset())

    def mp(self, minor: int, major: int) -> int:
        """From A (minor) and A -> B (major), B"""
        imp = self.formula(major)
        if not isinstance(imp, Imp) or not alpha_equal(imp.left, self.formula(minor)):
            raise TacticError(f"mp {minor} {major}: major premise mismatch")
        return self._append(imp.right, ModusPonens(minor, major),
                            self.deps(minor) | self.deps(major))

    def gen(self, i: int, var: Var) -> int:
        for h in self.deps(i):
            if var in self.formula(h).fv:
                raise TacticError(f"gen {i} {var.name}: variable free in hypothesis {h}")
        return self._append(Forall(var, self.formula(i)), Generalization(i, var), self.deps(i))

    # ------------------------------------------------------------------------
    # composition
    # ------------------------------------------------------------------------

    def include(self, other: 'Derivation') -> int:
        """Append a closed derivation; returns the index of its last line"""
        if other.hypotheses():
            raise TacticError("only closed derivations can be included")
        offset = len(self.lines)
        for line in other.lines:
            self.lines.append(_Line(line.formula, _shift(line.justification, offset), line.deps))
        return len(self.lines)

    def include_proof(self, p: HilbertProof) -> int:
        return self.include(Derivation.from_proof(p))

    def hypotheses(self) -> List[int]:
        return [i for i, line in enumerate(self.lines, start=1)
                if isinstance(line.justification, Hypothesis)]

    def to_proof(self) -> HilbertProof:
        if self.hypotheses():
            raise TacticError("derivation still has undischarged hypotheses")
        return HilbertProof(tuple(ProofLine(l.formula, l.justification) for l in self.lines))

    @classmethod
    def from_proof(cls, p: HilbertProof) -> 'Derivation':
        d = cls()
        d.lines = [_Line(l.formula, l.justification, frozenset()) for l in p.lines]
        return d

    # ------------------------------------------------------------------------
    # deduction transform
    # ------------------------------------------------------------------------

    def discharge(self, hyp: int, target: Optional[int] = None) -> Tuple['Derivation', int]:
        """
        Deduction transform for hypothesis `hyp`

        Every line A resting on H becomes H -> A: the hypothesis itself costs
        five lines, an MP three, a Gen three; independent lines used by
        dependent ones are lifted with K and one MP.

        Args:
            hyp: index of the hypothesis line H
            target: line whose lifted form is wanted (default: last line)

        Returns:
            (new derivation, index of H -> target)
        """
        if not isinstance(self.lines[hyp - 1].justification, Hypothesis):
            raise TacticError(f"line {hyp} is not a hypothesis")
        target = target or len(self.lines)
        h = self.formula(hyp)
        out = Derivation()
        plain: Dict[int, int] = {}
        lifted: Dict[int, int] = {}
        new_index: Dict[int, int] = {}

        def remap(deps: FrozenSet[int]) -> FrozenSet[int]:
            return frozenset(new_index[d] for d in deps if d != hyp)

        def lift(i: int) -> int:
            if i not in lifted:
                a = self.formula(i)
                k = out.axiom('L_K', A=a, B=h)
                lifted[i] = out.mp(plain[i], k)
            return lifted[i]

        for i, line in enumerate(self.lines, start=1):
            j = line.justification
            if i == hyp:
                lifted[i] = identity(out, h)
            elif hyp not in line.deps:
                if isinstance(j, Hypothesis):
                    plain[i] = out.hyp(line.formula)
                else:
                    plain[i] = out._append(line.formula, _reindex(j, plain), remap(line.deps))
                new_index[i] = plain[i]
            elif isinstance(j, ModusPonens):
                a, b = self.formula(j.minor), line.formula
                s = out.axiom('L_S', A=h, B=a, C=b)
                step = out.mp(lift(j.major), s)
                lifted[i] = out.mp(lift(j.minor), step)
            elif isinstance(j, Generalization):
                if j.var in h.fv:
                    raise TacticError(f"cannot discharge: {j.var.name} is free in the hypothesis")
                g = out.gen(lift(j.line), j.var)
                dist = out.axiom('Q_ALL_DIST', v=j.var, A=self.formula(j.line), B=h)
                lifted[i] = out.mp(g, dist)
            else:
                raise TacticError(f"line {i} depends on {hyp} but is {type(j).__name__}")
        return out, lift(target)


def identity(d: Derivation, h: Formula) -> int:
    """H -> H in five lines"""
    hh = Imp(h, h)
    s = d.axiom('L_S', A=h, B=hh, C=h)
    k1 = d.axiom('L_K', A=h, B=hh)
    step = d.mp(k1, s)
    k2 = d.axiom('L_K', A=h, B=h)
    return d.mp(k2, step)


def _reindex(j: Justification, plain: Dict[int, int]) -> Justification:
    if isinstance(j, ModusPonens):
        return ModusPonens(plain[j.minor], plain[j.major])
    if isinstance(j, Generalization):
        return Generalization(plain[j.line], j.var)
    return j


def _shift(j, offset: int):
    if isinstance(j, ModusPonens):
        return ModusPonens(j.minor + offset, j.major + offset)
    if isinstance(j, Generalization):
        return Generalization(j.line + offset, j.var)
    return j


# ============================================================================
# COMBINATORS
# ============================================================================

def implication_chain(d: Derivation, ab: int, bc: int) -> int:
    """From A -> B and B -> C, A -> C (5 lines)"""
    f_ab, f_bc = d.formula(ab), d.formula(bc)
    if not (isinstance(f_ab, Imp) and isinstance(f_bc, Imp)
            and alpha_equal(f_ab.right, f_bc.left)):
        raise TacticError(f"implication_chain {ab} {bc}: middle formulas differ")
    a, b, c = f_ab.left, f_ab.right, f_bc.right
    k = d.axiom('L_K', A=f_bc, B=a)
    a_bc = d.mp(bc, k)
    s = d.axiom('L_S', A=a, B=b, C=c)
    step = d.mp(a_bc, s)
    return d.mp(ab, step)


def forall_instantiate(d: Derivation, i: int, t: Term) -> int:
    """From all v A, A[v:=t] (2 lines)"""
    f = d.formula(i)
    if not isinstance(f, Forall):
        raise TacticError(f"forall_instantiate {i}: not a universal formula")
    elim = d.axiom('Q_ALL_ELIM', v=f.var, A=f.body, t=t)
    return d.mp(i, elim)


def _equation(d: Derivation, i: int) -> Eq:
    f = d.formula(i)
    if not isinstance(f, Eq):
        raise TacticError(f"line {i} is not an equation")
    return f


def _abstract_avoiding(body_of, avoid) -> PredicateAbstract:
    z = fresh_var('z', avoid)
    return PredicateAbstract(z, body_of(z))


def refl(d: Derivation, t: Term) -> int:
    return d.axiom('E_REFL', t=t)


def sym(d: Derivation, i: int) -> int:
    """From s = t, t = s (4 lines)"""
    eq = _equation(d, i)
    s, t = eq.left, eq.right
    P = _abstract_avoiding(lambda z: Eq(z, s), s.fv | t.fv)
    sub = d.axiom('E_SUBST', s=s, t=t, P=P)
    step = d.mp(i, sub)
    return d.mp(refl(d, s), step)


def trans(d: Derivation, i: int, j: int) -> int:
    """From a = b and b = c, a = c (3 lines)"""
    ab, bc = _equation(d, i), _equation(d, j)
    if not alpha_equal(ab.right, bc.left):
        raise TacticError(f"trans {i} {j}: middle terms differ")
    a = ab.left
    P = _abstract_avoiding(lambda z: Eq(a, z), a.fv | bc.left.fv | bc.right.fv)
    sub = d.axiom('E_SUBST', s=bc.left, t=bc.right, P=P)
    step = d.mp(j, sub)
    return d.mp(i, step)


def trans_chain(d: Derivation, indices: List[int]) -> int:
    result = indices[0]
    for j in indices[1:]:
        result = trans(d, result, j)
    return result


def congruence(d: Derivation, i: int, hole: Var, context: Term) -> int:
    """From l = r, C[l] = C[r] for the term context C with hole variable (4 lines)"""
    eq = _equation(d, i)
    l, r = eq.left, eq.right
    c_l = subst_term(context, hole, l)
    P = PredicateAbstract(hole, Eq(c_l, context))
    if hole in c_l.fv:
        raise TacticError("hole variable occurs in the substituted context")
    sub = d.axiom('E_SUBST', s=l, t=r, P=P)
    step = d.mp(i, sub)
    return d.mp(refl(d, c_l), step)


def rewrite(d: Derivation, eq_line: int, i: int, P: PredicateAbstract) -> int:
    """From s = t and P(s), P(t) (3 lines)"""
    eq = _equation(d, eq_line)
    if not alpha_equal(apply(P, eq.left), d.formula(i)):
        raise TacticError(f"rewrite {eq_line} {i}: line is not P(s)")
    sub = d.axiom('E_SUBST', s=eq.left, t=eq.right, P=P)
    step = d.mp(eq_line, sub)
    return d.mp(i, step)


def weaken(d: Derivation, i: int, h: Formula) -> int:
    """From A, H -> A (2 lines)"""
    k = d.axiom('L_K', A=d.formula(i), B=h)
    return d.mp(i, k)


def imp_apply(d: Derivation, xyz: int, y: int) -> int:
    """From X -> (Y -> Z) and Y, X -> Z (5 lines)"""
    f = d.formula(xyz)
    if not (isinstance(f, Imp) and isinstance(f.right, Imp)
            and alpha_equal(f.right.left, d.formula(y))):
        raise TacticError(f"imp_apply {xyz} {y}: premise mismatch")
    x, yy, z = f.left, f.right.left, f.right.right
    xy = weaken(d, y, x)
    s = d.axiom('L_S', A=x, B=yy, C=z)
    return d.mp(xy, d.mp(xyz, s))


def contract(d: Derivation, i: int) -> int:
    """From X -> (X -> Y), X -> Y (8 lines)"""
    f = d.formula(i)
    x, y = f.left, f.right.right
    s = d.axiom('L_S', A=x, B=x, C=y)
    step = d.mp(i, s)
    return d.mp(identity(d, x), step)


# ============================================================================
# CONNECTIVES
# ============================================================================

def _split(d: Derivation, i: int) -> And:
    f = d.formula(i)
    if not isinstance(f, And):
        raise TacticError(f"line {i} is not a conjunction")
    return f


def and_intro(d: Derivation, i: int, j: int) -> int:
    """From A and B, A /\\ B (3 lines)"""
    conj = d.axiom('L_AND_I', A=d.formula(i), B=d.formula(j))
    return d.mp(j, d.mp(i, conj))


def and_left(d: Derivation, i: int) -> int:
    f = _split(d, i)
    return d.mp(i, d.axiom('L_AND_E1', A=f.left, B=f.right))


def and_right(d: Derivation, i: int) -> int:
    f = _split(d, i)
    return d.mp(i, d.axiom('L_AND_E2', A=f.left, B=f.right))


def or_cases(d: Derivation, ac: int, bc: int) -> int:
    """From A -> C and B -> C, (A \\/ B) -> C (5 lines)"""
    f_ac, f_bc = d.formula(ac), d.formula(bc)
    elim = d.axiom('L_OR_E', A=f_ac.left, B=f_bc.left, C=f_ac.right)
    return d.mp(bc, d.mp(ac, elim))


def ex_elim(d: Derivation, i: int, var: Var) -> int:
    """From A -> B with var not free in B or the hypotheses, ex var A -> B (3 lines)"""
    f = d.formula(i)
    closed = d.gen(i, var)
    elim = d.axiom('Q_EX_ELIM', v=var, A=f.left, B=f.right)
    return d.mp(closed, elim)


def sym_imp(d: Derivation, s: Term, t: Term) -> int:
    """s = t -> t = s (7 lines)"""
    P = _abstract_avoiding(lambda w: Eq(w, s), s.fv | t.fv)
    sub = d.axiom('E_SUBST', s=s, t=t, P=P)
    return imp_apply(d, sub, refl(d, s))


def explode(d: Derivation, target: Formula) -> int:
    """0 = S(0) -> target (15 lines)"""
    flip = sym_imp(d, ZERO_T, ONE_T)
    efq = d.axiom('L_EFQ', A=Eq(ONE_T, ZERO_T), B=target)
    absurd = d.mp(d.axiom('PA_SUCC_NZ', t=ZERO_T), efq)
    return implication_chain(d, flip, absurd)


# ============================================================================
# CLASSICAL REASONING
# ============================================================================

def dne(d: Derivation, a: Formula) -> int:
    """~~A -> A"""
    efq = d.axiom('L_EFQ', A=Not(a), B=Not(Not(Not(a))))
    contra = d.axiom('L_CONTRA', A=a, B=Not(Not(a)))
    return contract(d, implication_chain(d, efq, contra))


def dni(d: Derivation, a: Formula) -> int:
    """A -> ~~A"""
    inner = dne(d, Not(a))
    contra = d.axiom('L_CONTRA', A=Not(Not(a)), B=a)
    return d.mp(inner, contra)


def contrapose(d: Derivation, i: int) -> int:
    """From X -> Y, ~Y -> ~X"""
    f = d.formula(i)
    x, y = f.left, f.right
    lifted = implication_chain(d, implication_chain(d, dne(d, x), i), dni(d, y))
    contra = d.axiom('L_CONTRA', A=Not(x), B=Not(y))
    return d.mp(lifted, contra)


def classical(d: Derivation, i: int) -> int:
    """From ~X -> X, X (8 lines)"""
    f = d.formula(i)
    if not (isinstance(f, Imp) and isinstance(f.left, Not) and alpha_equal(f.left.body, f.right)):
        raise TacticError(f"classical {i}: line is not ~X -> X")
    x = f.right
    true = Eq(ZERO_T, ZERO_T)
    efq = d.axiom('L_EFQ', A=x, B=Not(true))
    s = d.axiom('L_S', A=Not(x), B=x, C=Not(true))
    refuted = d.mp(i, d.mp(efq, s))
    contra = d.axiom('L_CONTRA', A=x, B=true)
    return d.mp(refl(d, ZERO_T), d.mp(refuted, contra))


def excluded_middle(d: Derivation, a: Formula) -> int:
    """A \\/ ~A"""
    left = d.axiom('L_OR_I1', A=a, B=Not(a))
    right = d.axiom('L_OR_I2', A=a, B=Not(a))
    not_a = contrapose(d, right)
    back = implication_chain(d, implication_chain(d, not_a, dne(d, a)), left)
    return classical(d, back)


# ============================================================================
# LEMMAS
# ============================================================================

def conjunction(formulas: List[Formula]) -> Formula:
    """Right-nested conjunction; a single formula stands for itself"""
    result = formulas[-1]
    for f in reversed(formulas[:-1]):
        result = And(f, result)
    return result


def assume(d: Derivation, formulas: List[Formula]) -> Tuple[int, List[int]]:
    """
    One hypothesis for the conjunction of formulas

    Returns:
        (hypothesis line, one line per conjunct)
    """
    h = d.hyp(conjunction(formulas))
    parts = []
    rest = h
    for _ in formulas[:-1]:
        parts.append(and_left(d, rest))
        rest = and_right(d, rest)
    parts.append(rest)
    return h, parts


def conjoin(d: Derivation, lines: List[int]) -> int:
    result = lines[-1]
    for i in reversed(lines[:-1]):
        result = and_intro(d, i, result)
    return result


def use_lemma(d: Derivation, lemma: HilbertProof, premises: List[int]) -> int:
    """Include a closed proof of (A1 /\\ ... /\\ An) -> G and apply it to lines for A1..An"""
    major = d.include_proof(lemma)
    return d.mp(conjoin(d, premises), major)


def close(d: Derivation, count: int = 1) -> Tuple[Derivation, int]:
    """
    Discharge the last `count` hypotheses, innermost first

    Returns:
        (new derivation, index of the discharged form of its last line)
    """
    target = len(d)
    for _ in range(count):
        hyps = d.hypotheses()
        if not hyps:
            raise TacticError("no hypothesis left to discharge")
        d, target = d.discharge(hyps[-1], target)
    return d, target
