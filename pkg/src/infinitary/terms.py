"""
Proof terms of the infinitary calculus and their local correctness

Every node carries its end-sequent, ordinal height and cut rank. Premise
sequents repeat the conclusion: a rule with principal formula P in gamma
has premises contained in gamma plus the component it introduces. omega-rule
children are given by one template with a free numeral variable.
"""

from dataclasses import dataclass, fields, replace
from typing import ClassVar, FrozenSet, Optional, Tuple, Union
import logging
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import OMEGA_SAMPLE_COUNT, active_profile
from ordinals import Ordinal, ZERO, successor, strictly_below, format_ordinal
from infinitary.formulas import (
    Formula, NTerm, NNum, NVar, NApp, Prime, Mem, NotMem, And, Or, ExN, AllN,
    TermEvaluationError, num, not_mem, eval_term, subst, subst_term, instance,
    dual, negate_prime, prime_holds, feps_star_total, k_of, format_formula,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProofTerm:
    sequent: FrozenSet[Formula]
    height: Ordinal
    rank: int

    tag: ClassVar[str] = ''
    premise_fields: ClassVar[Tuple[str, ...]] = ()

    def __post_init__(self):
        object.__setattr__(self, 'sequent', frozenset(self.sequent))

    def premises(self) -> Tuple['ProofTerm', ...]:
        return tuple(getattr(self, f) for f in self.premise_fields)


# ============================================================================
# AXIOMS
# ============================================================================

@dataclass(frozen=True)
class AxTruePrime(ProofTerm):
    formula: Prime
    tag: ClassVar[str] = 'ax-true-prime'


@dataclass(frozen=True)
class AxZeroN(ProofTerm):
    tag: ClassVar[str] = 'ax-zero-n'


@dataclass(frozen=True)
class AxNNegPair(ProofTerm):
    """m notin N, m in N"""
    term: NTerm
    tag: ClassVar[str] = 'ax-n-neg-pair'


@dataclass(frozen=True)
class AxFepsStar(ProofTerm):
    """m notin N, ex y in N feps*(m) = y"""
    term: NTerm
    tag: ClassVar[str] = 'ax-feps-star'


AXIOMS = (AxTruePrime, AxZeroN, AxNNegPair, AxFepsStar)


# ============================================================================
# RULES
# ============================================================================

@dataclass(frozen=True)
class RuleN(ProofTerm):
    """S(m) in N from m in N"""
    term: NTerm
    sub: ProofTerm
    tag: ClassVar[str] = 'rule-n'
    premise_fields: ClassVar[Tuple[str, ...]] = ('sub',)


@dataclass(frozen=True)
class RuleAnd(ProofTerm):
    principal: And
    sub0: ProofTerm
    sub1: ProofTerm
    tag: ClassVar[str] = 'rule-and'
    premise_fields: ClassVar[Tuple[str, ...]] = ('sub0', 'sub1')


@dataclass(frozen=True)
class RuleOr(ProofTerm):
    principal: Or
    side: int
    sub: ProofTerm
    tag: ClassVar[str] = 'rule-or'
    premise_fields: ClassVar[Tuple[str, ...]] = ('sub',)


@dataclass(frozen=True)
class RuleExists(ProofTerm):
    principal: ExN
    witness: NTerm
    sub: ProofTerm
    tag: ClassVar[str] = 'rule-exists'
    premise_fields: ClassVar[Tuple[str, ...]] = ('sub',)


@dataclass(frozen=True)
class RuleOmega(ProofTerm):
    """Premises template[var := n] for every numeral n"""
    principal: AllN
    var: NVar
    template: ProofTerm
    tag: ClassVar[str] = 'rule-omega'


@dataclass(frozen=True)
class CutN(ProofTerm):
    term: NTerm
    sub0: ProofTerm
    sub1: ProofTerm
    tag: ClassVar[str] = 'cut-n'
    premise_fields: ClassVar[Tuple[str, ...]] = ('sub0', 'sub1')


@dataclass(frozen=True)
class CutPrime(ProofTerm):
    formula: Prime
    sub0: ProofTerm
    sub1: ProofTerm
    tag: ClassVar[str] = 'cut-prime'
    premise_fields: ClassVar[Tuple[str, ...]] = ('sub0', 'sub1')


@dataclass(frozen=True)
class CutFepsStar(ProofTerm):
    """Cut over ex y in N R(y) for a prime R, feps*(m) = y in the standard case"""
    formula: ExN
    sub0: ProofTerm
    sub1: ProofTerm
    tag: ClassVar[str] = 'cut-feps-star'
    premise_fields: ClassVar[Tuple[str, ...]] = ('sub0', 'sub1')


@dataclass(frozen=True)
class Accum(ProofTerm):
    """Raise the height of sub to this node's height"""
    sub: ProofTerm
    tag: ClassVar[str] = 'accum'
    premise_fields: ClassVar[Tuple[str, ...]] = ('sub',)


@dataclass(frozen=True)
class Inv(ProofTerm):
    """
    Inversion of sub at one formula

    all y in N A with witness l is replaced by l notin N and A(l);
    (A \\/ B) with no witness is replaced by A and B.
    """
    formula: Union[AllN, Or]
    witness: Optional[int]
    sub: ProofTerm
    tag: ClassVar[str] = 'inv'
    premise_fields: ClassVar[Tuple[str, ...]] = ('sub',)


TERM_CLASSES = AXIOMS + (RuleN, RuleAnd, RuleOr, RuleExists, RuleOmega,
                         CutN, CutPrime, CutFepsStar, Accum, Inv)
TAGS = {cls.tag: cls for cls in TERM_CLASSES}


# ============================================================================
# SUBSTITUTION, OMEGA CHILDREN, INVERSION
# ============================================================================

def _subst_value(value, name: str, t: NTerm):
    if isinstance(value, ProofTerm):
        return subst_proof_term(value, name, t)
    if isinstance(value, (NNum, NVar, NApp)):
        return subst_term(value, name, t)
    if isinstance(value, (Prime, Mem, NotMem, And, Or, ExN, AllN)):
        return subst(value, name, t)
    if isinstance(value, frozenset):
        return frozenset(_subst_value(v, name, t) for v in value)
    return value


def subst_proof_term(h: ProofTerm, name: str, t: NTerm) -> ProofTerm:
    """Replace the numeral variable `name` throughout a term"""
    if isinstance(h, RuleOmega) and h.var.name == name:
        return replace(h, sequent=_subst_value(h.sequent, name, t),
                       principal=_subst_value(h.principal, name, t))
    changes = {f.name: _subst_value(getattr(h, f.name), name, t) for f in fields(h)}
    return replace(h, **changes)


def omega_child(h: RuleOmega, n: int) -> ProofTerm:
    return subst_proof_term(h.template, h.var.name, num(n))


def inversion_components(formula: Union[AllN, Or], witness: Optional[int]) -> FrozenSet[Formula]:
    if isinstance(formula, AllN):
        if witness is None:
            raise ValueError("inverting a universal needs a witness")
        return frozenset((not_mem(witness), subst(formula.body, formula.var.name, num(witness))))
    if isinstance(formula, Or):
        return frozenset((formula.left, formula.right))
    raise ValueError(f"cannot invert {format_formula(formula)}")


def invert(h: ProofTerm, formula: Union[AllN, Or], witness: Optional[int] = None) -> Inv:
    comps = inversion_components(formula, witness)
    return Inv((h.sequent - {formula}) | comps, h.height, h.rank, formula, witness, h)


def unfold_inv(h: Inv) -> ProofTerm:
    """
    Push an inversion one rule down, exposing a concrete last rule

    The result has the same end-sequent and height as h. When the inverted
    formula is principal, the premise sits one height lower and an
    accumulation restores the height.
    """
    sub = h.sub
    while isinstance(sub, Inv):
        sub = unfold_inv(sub)
    p, l = h.formula, h.witness

    if isinstance(sub, RuleOmega) and sub.principal == p:
        child = omega_child(sub, l)
        inner = invert(invert(child, p, l), instance(p, l))
        return Accum(h.sequent, h.height, h.rank, inner)
    if isinstance(sub, RuleOr) and sub.principal == p:
        return Accum(h.sequent, h.height, h.rank, invert(sub.sub, p))
    if isinstance(sub, RuleOmega):
        return replace(sub, sequent=h.sequent, template=invert(sub.template, p, l))
    changes = {f: invert(getattr(sub, f), p, l) for f in sub.premise_fields}
    return replace(sub, sequent=h.sequent, **changes)


# ============================================================================
# LOCAL CORRECTNESS
# ============================================================================

@dataclass(frozen=True)
class OK:
    pass


@dataclass(frozen=True)
class Fail:
    path: Tuple[int, ...]
    reason: str


def _fits(premise: ProofTerm, gamma: FrozenSet[Formula], *added: Formula) -> bool:
    return premise.sequent <= gamma | frozenset(added)


def _successor_height(h: ProofTerm, premises) -> Optional[str]:
    heights = {p.height for p in premises}
    if len(heights) != 1:
        return "premises have different heights"
    below = heights.pop()
    if h.height != successor(below):
        return f"height {format_ordinal(h.height)} is not {format_ordinal(below)} + 1"
    return None


def _has_successor_member(gamma: FrozenSet[Formula], t: NTerm) -> bool:
    target = eval_term(t) + 1
    for f in gamma:
        if isinstance(f, Mem):
            try:
                if eval_term(f.term) == target:
                    return True
            except TermEvaluationError:
                continue
    return False


def check_node(h: ProofTerm, step_budget: int = None) -> Optional[str]:
    """
    Reason why the last rule of h is not locally correct, or None

    Premises are consulted only for their end-sequents, heights and ranks.
    """
    gamma = h.sequent
    premises = h.premises()
    if h.rank < 0:
        return "negative rank"
    if any(p.rank > h.rank for p in premises):
        return "premise rank exceeds node rank"

    if isinstance(h, AXIOMS):
        if h.height != ZERO:
            return "axioms have height 0"
        if isinstance(h, AxTruePrime):
            if h.formula not in gamma:
                return "prime formula missing from sequent"
            if not prime_holds(h.formula):
                return f"{format_formula(h.formula)} is false"
        elif isinstance(h, AxZeroN):
            if Mem(num(0)) not in gamma:
                return "0 in N missing from sequent"
        elif isinstance(h, AxNNegPair):
            if Mem(h.term) not in gamma or NotMem(h.term) not in gamma:
                return "complementary N pair missing from sequent"
        elif NotMem(h.term) not in gamma or feps_star_total(h.term) not in gamma:
            return "feps* axiom formulas missing from sequent"
        return None

    if isinstance(h, RuleOmega):
        if h.principal not in gamma:
            return "principal formula missing from sequent"
        return None

    if isinstance(h, Accum):
        if not _fits(h.sub, gamma):
            return "premise sequent not contained in conclusion"
        k = k_of(gamma)
        budget = step_budget or active_profile()['step_down_budget']
        below = strictly_below(h.sub.height, h.height, k, budget)
        if below is None:
            return "step-down budget exhausted"
        if not below:
            return (f"{format_ordinal(h.sub.height)} is not <_{k} "
                    f"{format_ordinal(h.height)}")
        return None

    if isinstance(h, Inv):
        try:
            expected = (h.sub.sequent - {h.formula}) | inversion_components(h.formula, h.witness)
        except ValueError as e:
            return str(e)
        if gamma != expected:
            return "inverted sequent does not match"
        if h.height != h.sub.height:
            return "inversion changes the height"
        return None

    reason = _successor_height(h, premises)
    if reason:
        return reason

    if isinstance(h, RuleN):
        if not _has_successor_member(gamma, h.term):
            return "successor membership missing from sequent"
        if not _fits(h.sub, gamma, Mem(h.term)):
            return "premise does not fit"
    elif isinstance(h, (RuleAnd, RuleOr, RuleExists)):
        if h.principal not in gamma:
            return "principal formula missing from sequent"
        if isinstance(h, RuleAnd):
            if not _fits(h.sub0, gamma, h.principal.left):
                return "left premise does not fit"
            if not _fits(h.sub1, gamma, h.principal.right):
                return "right premise does not fit"
        elif isinstance(h, RuleOr):
            if h.side not in (0, 1):
                return "disjunct index must be 0 or 1"
            chosen = h.principal.left if h.side == 0 else h.principal.right
            if not _fits(h.sub, gamma, chosen):
                return "premise does not fit"
        elif not _fits(h.sub, gamma, instance(h.principal, h.witness)):
            return "premise does not fit"
    elif isinstance(h, CutN):
        if not _fits(h.sub0, gamma, Mem(h.term)) or not _fits(h.sub1, gamma, NotMem(h.term)):
            return "cut premises do not fit"
    elif isinstance(h, CutPrime):
        if not _fits(h.sub0, gamma, h.formula) or not _fits(h.sub1, gamma, negate_prime(h.formula)):
            return "cut premises do not fit"
    elif isinstance(h, CutFepsStar):
        if not isinstance(h.formula.body, Prime):
            return "cut formula body must be prime"
        if not _fits(h.sub0, gamma, h.formula) or not _fits(h.sub1, gamma, dual(h.formula)):
            return "cut premises do not fit"
    return None


def locally_correct(h: ProofTerm, samples: int = OMEGA_SAMPLE_COUNT,
                    step_budget: int = None) -> Union[OK, Fail]:
    """
    Check every node of a proof term

    omega-rule nodes are checked on their first `samples` children, each of
    which must sit exactly one height below the node.

    Returns:
        OK, or Fail with the path of child indices to the first bad node
    """
    stack = [(h, ())]
    while stack:
        node, path = stack.pop()
        try:
            reason = check_node(node, step_budget)
        except TermEvaluationError as e:
            reason = str(e)
        if reason:
            logger.debug("local check failed at %s: %s", path, reason)
            return Fail(path, reason)
        if isinstance(node, RuleOmega):
            for n in range(samples):
                child = omega_child(node, n)
                if node.height != successor(child.height):
                    return Fail(path + (n,), "omega child is not one height below")
                if not _fits(child, node.sequent, instance(node.principal, n)):
                    return Fail(path + (n,), "omega child does not fit")
                stack.append((child, path + (n,)))
        else:
            for i, p in reversed(list(enumerate(node.premises()))):
                stack.append((p, path + (i,)))
    return OK()
