"""
Reduction walker for rank-0 proofs of Sigma^N sequents

Starting from h_0, each step reads the last rule of h_i and moves to one
premise, keeping the current sequent gamma_i, its height alpha_i and input
k_i = k(gamma_i). The values K_i = F_(mu + alpha_i)(k_i) are never computed:
every step carries a DominanceCertificate naming the inequality chain that
gives K_(i+1) <= K_i. Cut and conjunction branches are chosen by falsity,
decided with the hierarchy handle by threshold evaluation.
"""

from dataclasses import dataclass, field
from math import inf
from typing import Iterable, List, Optional, Tuple, Union
import json
import logging
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import WITNESS_SEARCH_LIMIT, active_profile
from ordinals import (
    Ordinal, OMEGA, add, successor, mesh, fund_seq, strictly_below, format_ordinal, nat,
)
from infinitary.formulas import (
    Formula, Mem, NotMem, TermEvaluationError, not_mem, subst, num, instance, dual, eval_term,
    negate_prime, prime_holds, truth_threshold, has_search, is_sigma_n_sequent, k_of,
    format_sequent,
)
from infinitary.hierarchy import Hierarchy, Surrogate, Yes, No, Undecided
from infinitary.terms import (
    ProofTerm, AXIOMS, RuleN, RuleAnd, RuleOr, RuleExists, RuleOmega,
    CutN, CutPrime, CutFepsStar, Accum, Inv, check_node, invert, unfold_inv,
)

logger = logging.getLogger(__name__)


class ReductionPreconditionError(ValueError):
    """The start term is not a rank-0 proof of a Sigma^N sequent meshing with mu"""


# ============================================================================
# CERTIFICATES
# ============================================================================

SAME_INPUT_DESCENT = 'SameInputDescent'
INPUT_BELOW_BOUND = 'InputBelowBound'
ACCUM_MESH = 'AccumMesh'

CERTIFICATE_TAGS = (SAME_INPUT_DESCENT, INPUT_BELOW_BOUND, ACCUM_MESH)


@dataclass(frozen=True)
class DominanceCertificate:
    """
    Why K_(i+1) <= K_i

    SameInputDescent: k unchanged and mu + alpha_(i+1) <_k mu + alpha_i.
    InputBelowBound: alpha_i = alpha_(i+1) + 1 and k_(i+1) = max(k_i, 3w) with
    3w < F_(mu + alpha_(i+1))(k_i); then F(k_(i+1)) <= F^2(k_i) < F_(+1)(k_i).
    AccumMesh: mu meshes with alpha_i and alpha_(i+1) <_k alpha_i; non-strict.
    """
    tag: str
    mu: Ordinal
    alpha: Ordinal
    alpha_next: Ordinal
    k: int
    k_next: int
    witness: Optional[int] = None

    @property
    def strict(self) -> bool:
        return self.tag != ACCUM_MESH

    def to_dict(self) -> dict:
        return {
            'tag': self.tag,
            'mu': format_ordinal(self.mu),
            'alpha': format_ordinal(self.alpha),
            'alpha_next': format_ordinal(self.alpha_next),
            'k': self.k,
            'k_next': self.k_next,
            'witness': self.witness,
        }


def certificate_check(c: DominanceCertificate, hierarchy: Hierarchy = None,
                      step_budget: int = None) -> bool:
    """
    Validate a certificate symbolically

    Args:
        c: certificate
        hierarchy: when given, the bound fact of InputBelowBound is re-decided
        step_budget: waypoint budget for step-down searches

    Returns:
        True when the certificate's inequality chain holds
    """
    budget = step_budget or active_profile()['step_down_budget']
    beta, beta_next = add(c.mu, c.alpha), add(c.mu, c.alpha_next)

    if c.tag == SAME_INPUT_DESCENT:
        return c.k == c.k_next and strictly_below(beta_next, beta, c.k, budget) is True

    if c.tag == ACCUM_MESH:
        return (c.k == c.k_next
                and mesh(c.mu, c.alpha)
                and strictly_below(c.alpha_next, c.alpha, c.k, budget) is True
                and strictly_below(beta_next, beta, c.k, budget) is True)

    if c.tag == INPUT_BELOW_BOUND:
        if c.witness is None or c.k < 2 or c.alpha != successor(c.alpha_next):
            return False
        if c.k_next != max(c.k, 3 * c.witness):
            return False
        if hierarchy is not None:
            return isinstance(hierarchy.at_least(beta_next, c.k, 3 * c.witness + 1), Yes)
        return True

    return False


# ============================================================================
# TRACES
# ============================================================================

@dataclass(frozen=True)
class TraceStep:
    index: int
    path: Tuple[int, ...]
    rule: str
    sequent: frozenset
    alpha: Ordinal
    k: int
    certificate: Optional[DominanceCertificate] = None

    def to_dict(self) -> dict:
        return {
            'step': self.index,
            'path': list(self.path),
            'rule': self.rule,
            'sequent': format_sequent(self.sequent),
            'alpha': format_ordinal(self.alpha),
            'k': self.k,
            'certificate': self.certificate.to_dict() if self.certificate else None,
        }


@dataclass(frozen=True)
class SequentTrue:
    step: int


@dataclass(frozen=True)
class LocalError:
    step: int
    reason: str


@dataclass(frozen=True)
class BudgetExhausted:
    steps: int


Verdict = Union[SequentTrue, LocalError, BudgetExhausted]


@dataclass
class ReductionTrace:
    mu: Ordinal
    hierarchy: str
    steps: List[TraceStep] = field(default_factory=list)
    verdict: Optional[Verdict] = None

    def certificates(self) -> List[DominanceCertificate]:
        return [s.certificate for s in self.steps if s.certificate is not None]

    def nonstrict_steps_keep_sequent(self) -> bool:
        """A non-strict certificate implies gamma_(i+1) = gamma_i"""
        for cur, nxt in zip(self.steps, self.steps[1:]):
            if cur.certificate and not cur.certificate.strict and cur.sequent != nxt.sequent:
                return False
        return True

    def verdict_dict(self) -> dict:
        v = self.verdict
        result = {'verdict': type(v).__name__}
        result.update(v.__dict__)
        return result

    def to_json_lines(self) -> str:
        """One JSON object per step, then the verdict"""
        lines = [json.dumps(s.to_dict(), sort_keys=True) for s in self.steps]
        lines.append(json.dumps(self.verdict_dict(), sort_keys=True))
        return '\n'.join(lines) + '\n'


# ============================================================================
# WALKER
# ============================================================================

@dataclass(frozen=True)
class _Move:
    branch: int
    sub: ProofTerm
    added: Tuple[Formula, ...]
    tag: str
    witness: Optional[int] = None


def _true_at(phi: Formula, beta: Ordinal, k: int, hierarchy: Hierarchy) -> Optional[bool]:
    """Is phi true in H_beta(k)? None when undecided"""
    threshold = truth_threshold(phi)
    if threshold == 0:
        return True
    if threshold == inf and not has_search(phi):
        return False
    if threshold == inf:
        horizon = hierarchy.at_least(beta, k, 3 * WITNESS_SEARCH_LIMIT + 4)
        return False if isinstance(horizon, No) else None
    decision = hierarchy.at_least(beta, k, threshold)
    if isinstance(decision, Undecided):
        return None
    return isinstance(decision, Yes)


def _least_witness(e) -> Optional[int]:
    for m in range(WITNESS_SEARCH_LIMIT + 1):
        if prime_holds(subst(e.body, e.var.name, num(m))):
            return m
    return None


def _move(h: ProofTerm, mu: Ordinal, k: int, hierarchy: Hierarchy) -> Union[_Move, Verdict, str]:
    """Next premise, or a verdict-like outcome: 'undecided' or a local error reason"""
    if isinstance(h, RuleN):
        return _Move(0, h.sub, (Mem(h.term),), SAME_INPUT_DESCENT)
    if isinstance(h, RuleAnd):
        left_true = _true_at(h.principal.left, add(mu, h.height), k, hierarchy)
        if left_true is None:
            return 'undecided'
        if not left_true:
            return _Move(0, h.sub0, (h.principal.left,), SAME_INPUT_DESCENT)
        return _Move(1, h.sub1, (h.principal.right,), SAME_INPUT_DESCENT)
    if isinstance(h, RuleOr):
        chosen = h.principal.left if h.side == 0 else h.principal.right
        return _Move(0, h.sub, (chosen,), SAME_INPUT_DESCENT)
    if isinstance(h, RuleExists):
        return _Move(0, h.sub, (instance(h.principal, h.witness),), SAME_INPUT_DESCENT)
    if isinstance(h, Accum):
        return _Move(0, h.sub, (), ACCUM_MESH)
    if isinstance(h, RuleOmega):
        return "omega rule cannot end a proof of a Sigma^N sequent"

    beta_next = add(mu, h.sub0.height)
    if isinstance(h, CutPrime):
        if prime_holds(h.formula):
            return _Move(1, h.sub1, (negate_prime(h.formula),), SAME_INPUT_DESCENT)
        return _Move(0, h.sub0, (h.formula,), SAME_INPUT_DESCENT)
    if isinstance(h, CutN):
        member = _true_at(Mem(h.term), beta_next, k, hierarchy)
        if member is None:
            return 'undecided'
        if not member:
            return _Move(0, h.sub0, (Mem(h.term),), SAME_INPUT_DESCENT)
        return _Move(1, h.sub1, (NotMem(h.term),), INPUT_BELOW_BOUND, eval_term(h.term))
    if isinstance(h, CutFepsStar):
        exists = _true_at(h.formula, beta_next, k, hierarchy)
        if exists is None:
            return 'undecided'
        if not exists:
            return _Move(0, h.sub0, (h.formula,), SAME_INPUT_DESCENT)
        l = _least_witness(h.formula)
        inverted = invert(h.sub1, dual(h.formula), l)
        added = (not_mem(l), negate_prime(subst(h.formula.body, h.formula.var.name, num(l))))
        return _Move(1, inverted, added, INPUT_BELOW_BOUND, l)
    return f"unexpected term {type(h).__name__}"


def reduce_trace(h: ProofTerm, mu: Ordinal, hierarchy: Hierarchy,
                 budget: int = None, step_budget: int = None) -> ReductionTrace:
    """
    Walk a rank-0 proof of a Sigma^N sequent

    Args:
        h: start term
        mu: offset ordinal, meshing with the height of h
        hierarchy: decides truth in H_(mu + alpha)(k) for branch choices
        budget: maximal number of steps
        step_budget: waypoint budget for local step-down checks

    Returns:
        ReductionTrace ending in SequentTrue, LocalError or BudgetExhausted

    Raises:
        ReductionPreconditionError: rank, sequent shape or meshing violated
    """
    if h.rank != 0:
        raise ReductionPreconditionError(f"start term has rank {h.rank}, expected 0")
    if not is_sigma_n_sequent(h.sequent):
        raise ReductionPreconditionError("end-sequent is not a Sigma^N sequent")
    if not mesh(mu, h.height):
        raise ReductionPreconditionError(
            f"{format_ordinal(mu)} does not mesh with {format_ordinal(h.height)}")

    budget = budget or active_profile()['reduction_budget']
    trace = ReductionTrace(mu, hierarchy.name)
    term, gamma, path = h, h.sequent, ()

    for i in range(budget):
        while isinstance(term, Inv):
            term = unfold_inv(term)
        k = k_of(gamma)

        def record(cert=None):
            trace.steps.append(TraceStep(i, path, term.tag, gamma, term.height, k, cert))

        if not term.sequent <= gamma:
            record()
            trace.verdict = LocalError(i, "end-sequent not contained in the current sequent")
            return trace
        try:
            reason = check_node(term, step_budget)
        except TermEvaluationError as e:
            reason = str(e)
        if reason is None and term.rank != 0:
            reason = f"rank {term.rank} inside a rank-0 walk"
        if reason:
            record()
            trace.verdict = LocalError(i, reason)
            return trace

        if isinstance(term, AXIOMS):
            record()
            trace.verdict = SequentTrue(i)
            logger.info("reduction reached an axiom at step %d", i)
            return trace

        outcome = _move(term, mu, k, hierarchy)
        if outcome == 'undecided':
            record()
            trace.verdict = BudgetExhausted(i)
            return trace
        if isinstance(outcome, str):
            record()
            trace.verdict = LocalError(i, outcome)
            return trace

        next_gamma = gamma | frozenset(outcome.added)
        cert = DominanceCertificate(outcome.tag, mu, term.height, outcome.sub.height,
                                    k, k_of(next_gamma), outcome.witness)
        record(cert)
        logger.debug("step %d: %s -> branch %d (%s)", i, term.tag, outcome.branch, outcome.tag)
        term, gamma, path = outcome.sub, next_gamma, path + (outcome.branch,)

    trace.verdict = BudgetExhausted(budget)
    return trace


# ============================================================================
# NUMERIC SPOT CHECKS
# ============================================================================

@dataclass
class SpotCheckReport:
    checked: int = 0
    skipped: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def micro_ordinals(finite: int = 6, above_omega: int = 6) -> List[Ordinal]:
    """0 .. finite-1 and w + 0 .. w + above_omega-1"""
    return [nat(i) for i in range(finite)] + [add(OMEGA, nat(i)) for i in range(above_omega)]


def surrogate_spot_check(betas: Iterable[Ordinal] = None, ks: Iterable[int] = range(7),
                         surrogate: Surrogate = None) -> SpotCheckReport:
    """
    G^2_b(k) < G_(b+1)(k) and G_({b}(k))(k) < G_b(k) by evaluation

    Pairs whose values pass the surrogate's bit cap are counted as skipped.
    """
    g = surrogate or Surrogate()
    report = SpotCheckReport()
    for beta in (betas if betas is not None else micro_ordinals()):
        for k in ks:
            twice = g.iterate(beta, k, 2)
            above = g.evaluate(successor(beta), k)
            if twice is None or above is None:
                report.skipped += 1
            else:
                report.checked += 1
                if not twice < above:
                    report.violations.append(f"G^2_{format_ordinal(beta)}({k}) >= G_(+1)({k})")

            if beta == nat(0):
                continue
            lower = g.evaluate(fund_seq(beta, k), k)
            here = g.evaluate(beta, k)
            if lower is None or here is None:
                report.skipped += 1
            else:
                report.checked += 1
                if not lower < here:
                    report.violations.append(f"step-down from {format_ordinal(beta)} at {k}")
    logger.info("surrogate spot check: %d checked, %d skipped, %d violations",
                report.checked, report.skipped, len(report.violations))
    return report


def trace_spot_check(trace: ReductionTrace, surrogate: Surrogate = None) -> SpotCheckReport:
    """Recompute K_i = G_(mu + alpha_i)(k_i) and compare along each certificate"""
    g = surrogate or Surrogate()
    report = SpotCheckReport()
    for cur, nxt in zip(trace.steps, trace.steps[1:]):
        k_cur = g.evaluate(add(trace.mu, cur.alpha), cur.k)
        k_nxt = g.evaluate(add(trace.mu, nxt.alpha), nxt.k)
        if k_cur is None or k_nxt is None:
            report.skipped += 1
            continue
        report.checked += 1
        strict = cur.certificate.strict
        if k_nxt > k_cur or (strict and k_nxt == k_cur):
            report.violations.append(f"step {cur.index}: K went from {k_cur} to {k_nxt}")
    return report
