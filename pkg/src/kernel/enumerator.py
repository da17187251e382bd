"""
Bounded consistency search: every proof of at most n symbols over a finite
slice of the language is tried for a derivation of 0 = S(0)
"""

from dataclasses import dataclass
from typing import List, Tuple, Union
import logging
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import ENUMERATION_HARD_CEILING
from syntax import (
    Formula, PredicateAbstract, Var, Eq, Prec, Not, Imp, Forall,
    ZERO_T, ONE_T, length, alpha_equal,
)
from kernel.schemas import ParamKind, Theory
from kernel.proof import (
    AxiomInstance, ModusPonens, Generalization, ProofLine, HilbertProof,
    justification_length,
)

logger = logging.getLogger(__name__)

FALSUM = Eq(ZERO_T, ONE_T)


class EnumerationCapError(ValueError):
    """Requested bound above the configured hard cap"""


@dataclass(frozen=True)
class NoRefutationUpTo:
    n: int


@dataclass(frozen=True)
class Refutation:
    proof: HilbertProof


ConsistencyVerdict = Union[NoRefutationUpTo, Refutation]


class _Slice:
    """Finite parameter pools: terms 0, v0, S(0) and the prime formulas over them"""

    def __init__(self, budget: int):
        v0 = Var('v', 0)
        z0 = Var('z', 0)
        self.vars = [v0]
        self.terms = [ZERO_T, v0, ONE_T]
        primes = [rel(s, t) for rel in (Eq, Prec) for s in self.terms for t in self.terms]
        formulas = primes + [Not(p) for p in primes]
        formulas += [Imp(a, b) for a in primes for b in primes]
        self.formulas = [f for f in formulas if length(f) <= budget]
        hole_terms = [ZERO_T, z0, ONE_T]
        bodies = [rel(s, t) for rel in (Eq, Prec) for s in hole_terms for t in hole_terms]
        self.abstracts = [PredicateAbstract(z0, b) for b in bodies if z0 in b.fv]

    def pool(self, kind: ParamKind) -> list:
        return {
            ParamKind.VAR: self.vars,
            ParamKind.TERM: self.terms,
            ParamKind.FORMULA: self.formulas,
            ParamKind.ABSTRACT: self.abstracts,
        }[kind]


def _axiom_instances(theory: Theory, budget: int) -> List[Tuple[int, ProofLine]]:
    """(cost, line) for every sliced axiom instance costing at most budget"""
    sl = _Slice(budget)
    found = []
    for schema in theory.schemas:
        choices = []
        for name, kind in schema.params:
            pool = sorted(((1 + length(v), v) for v in sl.pool(kind)), key=lambda cv: cv[0])
            choices.append((name, pool))
        for overhead, params in _assignments(choices, 1, budget):
            values = dict(params)
            if schema.check_side(**values):
                continue
            formula = schema.build(**values)
            cost = overhead + length(formula)
            if cost <= budget:
                found.append((cost, ProofLine(formula, AxiomInstance(schema.id, params))))
    found.sort(key=lambda item: item[0])
    return found


def _assignments(choices, spent: int, budget: int):
    """Parameter tuples whose justification overhead stays below budget"""
    if not choices:
        yield spent, ()
        return
    (name, pool), rest = choices[0], choices[1:]
    for cost, value in pool:
        if spent + cost >= budget:
            break
        for total, tail in _assignments(rest, spent + cost, budget):
            yield total, ((name, value),) + tail


def enumerate_consistency(theory: Theory, n: int,
                          hard_cap: int = ENUMERATION_HARD_CEILING) -> ConsistencyVerdict:
    """
    Exhaustive search for a refutation of at most n symbols

    Args:
        theory: theory whose axioms are instantiated over the slice
        n: symbol bound
        hard_cap: largest admissible n

    Returns:
        Refutation(proof ending in 0 = S(0)) or NoRefutationUpTo(n)
    """
    if n > hard_cap:
        raise EnumerationCapError(f"bound {n} exceeds hard cap {hard_cap}")
    axioms = _axiom_instances(theory, n)
    logger.info("consistency search over %s up to %d symbols: %d axiom instances",
                theory.id, n, len(axioms))

    lines: List[ProofLine] = []
    mp_cost = justification_length(ModusPonens(1, 1))
    gen_cost = justification_length(Generalization(1, Var('v', 0)))

    def present(f: Formula) -> bool:
        return any(alpha_equal(f, line.formula) for line in lines)

    def moves(remaining: int):
        for cost, line in axioms:
            if cost > remaining:
                break
            yield cost, line
        for i, minor in enumerate(lines, start=1):
            for j, major in enumerate(lines, start=1):
                f = major.formula
                if isinstance(f, Imp) and alpha_equal(f.left, minor.formula):
                    cost = mp_cost + length(f.right)
                    if cost <= remaining:
                        yield cost, ProofLine(f.right, ModusPonens(i, j))
        for i, line in enumerate(lines, start=1):
            for v in (Var('v', 0),):
                f = Forall(v, line.formula)
                cost = gen_cost + length(f)
                if cost <= remaining:
                    yield cost, ProofLine(f, Generalization(i, v))

    def search(remaining: int):
        for cost, line in moves(remaining):
            if present(line.formula):
                continue
            lines.append(line)
            if alpha_equal(line.formula, FALSUM):
                return HilbertProof(tuple(lines))
            found = search(remaining - cost)
            if found is not None:
                return found
            lines.pop()
        return None

    proof = search(n)
    if proof is not None:
        logger.info("refutation found with %d lines", len(proof))
        return Refutation(proof)
    return NoRefutationUpTo(n)
