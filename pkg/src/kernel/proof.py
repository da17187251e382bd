"""
Hilbert proofs in sequence form: lines, justifications, the checker, symbol
counting, the text file format and substitution for R through a proof
"""

from dataclasses import dataclass
from typing import Iterable, List, Tuple, Union
import logging
import re

from syntax import (
    Formula, PredicateAbstract, Var, Forall, Imp,
    render, length, parse_formula, parse_term, parse_abstract, parse_var,
    FormulaParseError, alpha_equal, subst_R, subst_R_abstract,
)
from kernel.schemas import ParamKind, Theory

logger = logging.getLogger(__name__)


class ProofFormatError(ValueError):
    """Malformed proof file or justification token"""


# ============================================================================
# PROOF OBJECTS
# ============================================================================

@dataclass(frozen=True)
class AxiomInstance:
    schema_id: str
    params: Tuple[Tuple[str, object], ...] = ()

    def values(self) -> dict:
        return dict(self.params)


@dataclass(frozen=True)
class ModusPonens:
    minor: int
    major: int


@dataclass(frozen=True)
class Generalization:
    line: int
    var: Var


Justification = Union[AxiomInstance, ModusPonens, Generalization]


@dataclass(frozen=True)
class ProofLine:
    formula: Formula
    justification: Justification


@dataclass(frozen=True)
class HilbertProof:
    lines: Tuple[ProofLine, ...] = ()

    @property
    def conclusion(self) -> Formula:
        if not self.lines:
            raise ValueError("empty proof has no conclusion")
        return self.lines[-1].formula

    def __len__(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class Accepted:
    lines: int


@dataclass(frozen=True)
class Rejected:
    line: int
    reason: str


# ============================================================================
# CHECKER
# ============================================================================

def _param_kind_ok(kind: ParamKind, value) -> bool:
    if kind is ParamKind.VAR:
        return isinstance(value, Var)
    if kind is ParamKind.ABSTRACT:
        return isinstance(value, PredicateAbstract)
    if kind is ParamKind.FORMULA:
        return isinstance(value, Formula)
    return not isinstance(value, (Formula, PredicateAbstract)) and hasattr(value, 'fv')


def _check_axiom(j: AxiomInstance, formula: Formula, theory: Theory):
    key = (j, formula)
    if key not in theory.verdicts:
        theory.verdicts[key] = _axiom_reason(j, formula, theory)
    return theory.verdicts[key]


def _axiom_reason(j: AxiomInstance, formula: Formula, theory: Theory):
    schema = theory.get(j.schema_id)
    if schema is None:
        return f"{j.schema_id} is not an axiom of {theory.id}"
    names = [name for name, _ in j.params]
    if names != [name for name, _ in schema.params]:
        return "parameter mismatch"
    values = j.values()
    for name, kind in schema.params:
        if not _param_kind_ok(kind, values[name]):
            return "parameter mismatch"
    failure = schema.check_side(**values)
    if failure:
        return f"side condition failed: {failure}"
    try:
        instance = schema.build(**values)
    except (TypeError, ValueError) as e:
        return f"parameter mismatch: {e}"
    if not alpha_equal(instance, formula):
        return f"formula is not an instance of {j.schema_id}"
    return None


def check(p: HilbertProof, theory: Theory) -> Union[Accepted, Rejected]:
    """
    Verify every line of a proof

    Args:
        p: proof to check
        theory: axioms available to the proof

    Returns:
        Accepted, or Rejected at the first bad line (1-based)
    """
    for i, line in enumerate(p.lines, start=1):
        j = line.justification
        if isinstance(j, AxiomInstance):
            reason = _check_axiom(j, line.formula, theory)
        elif isinstance(j, ModusPonens):
            reason = _check_mp(p, i, j, line.formula)
        elif isinstance(j, Generalization):
            reason = _check_gen(p, i, j, line.formula)
        else:
            reason = "unknown justification"
        if reason:
            logger.debug("line %d rejected: %s", i, reason)
            return Rejected(i, reason)
    return Accepted(len(p.lines))


def _earlier(i: int, ref: int) -> bool:
    return 1 <= ref < i


def _check_mp(p: HilbertProof, i: int, j: ModusPonens, formula: Formula):
    if not (_earlier(i, j.minor) and _earlier(i, j.major)):
        return "premise index out of range"
    minor = p.lines[j.minor - 1].formula
    major = p.lines[j.major - 1].formula
    if not isinstance(major, Imp) or not alpha_equal(major.left, minor):
        return "major premise mismatch"
    if not alpha_equal(major.right, formula):
        return "conclusion mismatch"
    return None


def _check_gen(p: HilbertProof, i: int, j: Generalization, formula: Formula):
    if not _earlier(i, j.line):
        return "premise index out of range"
    if not alpha_equal(Forall(j.var, p.lines[j.line - 1].formula), formula):
        return "generalization mismatch"
    return None


# ============================================================================
# LENGTH
# ============================================================================

def justification_length(j: Justification, mode: str = 'normative') -> int:
    """Symbols charged for a justification token"""
    if isinstance(j, AxiomInstance):
        return 1 + sum(1 + length(value, mode) for _, value in j.params)
    return 3


def proof_length(p: HilbertProof, mode: str = 'normative') -> int:
    """Total symbols: every line formula plus its justification"""
    return sum(length(line.formula, mode) + justification_length(line.justification, mode)
               for line in p.lines)


# ============================================================================
# TEXT FORMAT
# ============================================================================

def render_justification(j: Justification) -> str:
    if isinstance(j, AxiomInstance):
        if not j.params:
            return f"ax:{j.schema_id}"
        body = ' ; '.join(f"{name}:={render(value)}" for name, value in j.params)
        return f"ax:{j.schema_id}{{{body}}}"
    if isinstance(j, ModusPonens):
        return f"mp {j.minor} {j.major}"
    return f"gen {j.line} {j.var.name}"


def render_proof(p: HilbertProof) -> str:
    return ''.join(
        f"{i} | {render(line.formula)} | {render_justification(line.justification)}\n"
        for i, line in enumerate(p.lines, start=1)
    )


_AXIOM = re.compile(r'ax:([A-Z][A-Z0-9_]*)(?:\{(.*)\})?$')
_MP = re.compile(r'mp (\d+) (\d+)$')
_GEN = re.compile(r'gen (\d+) (\S+)$')


def _parse_value(text: str):
    text = text.strip()
    if text.startswith('\\'):
        return parse_abstract(text)
    try:
        return parse_formula(text)
    except FormulaParseError:
        pass
    try:
        return parse_var(text)
    except FormulaParseError:
        return parse_term(text)


def parse_justification(text: str) -> Justification:
    text = text.strip()
    m = _AXIOM.match(text)
    if m:
        params = []
        if m.group(2):
            for chunk in m.group(2).split(';'):
                if ':=' not in chunk:
                    raise ProofFormatError(f"bad parameter {chunk!r}")
                name, value = chunk.split(':=', 1)
                try:
                    params.append((name.strip(), _parse_value(value)))
                except FormulaParseError as e:
                    raise ProofFormatError(str(e)) from e
        return AxiomInstance(m.group(1), tuple(params))
    m = _MP.match(text)
    if m:
        return ModusPonens(int(m.group(1)), int(m.group(2)))
    m = _GEN.match(text)
    if m:
        try:
            return Generalization(int(m.group(1)), parse_var(m.group(2)))
        except FormulaParseError as e:
            raise ProofFormatError(str(e)) from e
    raise ProofFormatError(f"unknown justification {text!r}")


def parse_proof(text: str) -> HilbertProof:
    """Read the `<index> | <formula> | <justification>` line format"""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith('#'):
            continue
        parts = raw.split('|')
        if len(parts) != 3:
            raise ProofFormatError(f"line {lineno}: expected three '|'-separated fields")
        index, formula_text, just_text = parts
        if not index.strip().isdigit() or int(index) != len(lines) + 1:
            raise ProofFormatError(f"line {lineno}: index {index.strip()!r} out of sequence")
        try:
            formula = parse_formula(formula_text.strip())
        except FormulaParseError as e:
            raise ProofFormatError(f"line {lineno}: {e}") from e
        lines.append(ProofLine(formula, parse_justification(just_text)))
    return HilbertProof(tuple(lines))


# ============================================================================
# SUBSTITUTION
# ============================================================================

def _subst_value(value, psi: PredicateAbstract, memo: dict):
    if isinstance(value, PredicateAbstract):
        return subst_R_abstract(value, psi, memo)
    if isinstance(value, Formula):
        return subst_R(value, psi, memo)
    return value


def subst_proof(p: HilbertProof, psi: PredicateAbstract) -> HilbertProof:
    """
    Replace R by psi in every line and every axiom parameter

    psi may mention no free variable besides its own; axiom schemas are closed
    under the substitution, so accepted proofs stay accepted.
    """
    if psi.fv:
        raise ValueError("substituted abstract must be closed")
    lines = []
    memo = {}
    for line in p.lines:
        j = line.justification
        if isinstance(j, AxiomInstance) and j.params:
            j = AxiomInstance(j.schema_id,
                              tuple((name, _subst_value(v, psi, memo)) for name, v in j.params))
        lines.append(ProofLine(subst_R(line.formula, psi, memo), j))
    return HilbertProof(tuple(lines))


def concat(proofs: Iterable[HilbertProof]) -> HilbertProof:
    """Concatenate proofs, shifting line references"""
    lines: List[ProofLine] = []
    for p in proofs:
        offset = len(lines)
        for line in p.lines:
            lines.append(ProofLine(line.formula, _shift(line.justification, offset)))
    return HilbertProof(tuple(lines))


def _shift(j: Justification, offset: int) -> Justification:
    if isinstance(j, ModusPonens):
        return ModusPonens(j.minor + offset, j.major + offset)
    if isinstance(j, Generalization):
        return Generalization(j.line + offset, j.var)
    return j
