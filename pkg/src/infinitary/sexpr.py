"""
S-expression text format for proof terms

    (rule-or :h "2" :r 0 :seq ((or (notin n) (exn y (= (feps* n) y))))
      (or (notin n) (exn y (= (feps* n) y))) 0
      (...))

Terms are integers, variable names or (op args...). Formulas are
(= a b), (!= a b), (< a b), (>= a b), (in t), (notin t), (and A B), (or A B),
(exn y A), (alln y A). Each proof node is (tag :h "ordinal" :r rank :seq (...))
followed by its rule fields; an omitted inversion witness is written nil.
"""

import re
from typing import List, Union

from ordinals import parse_ordinal, format_ordinal, OrdinalParseError
from infinitary.formulas import (
    NNum, NVar, NApp, ARITY, Prime, Mem, NotMem, And, Or, ExN, AllN, NEGATED_RELATION,
)
from infinitary.terms import (
    ProofTerm, TAGS, AxTruePrime, AxZeroN, AxNNegPair, AxFepsStar, RuleN, RuleAnd,
    RuleOr, RuleExists, RuleOmega, CutN, CutPrime, CutFepsStar, Accum, Inv,
)


class TermFormatError(ValueError):
    """Malformed proof-term text"""


class _Str(str):
    """Quoted atom"""


_TOKEN = re.compile(r'\s*(?:(\()|(\))|"([^"]*)"|([^\s()"]+))')


def _read_tree(text: str):
    stack = [[]]
    text = text.strip()
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise TermFormatError(f"unexpected character at offset {pos}")
        pos = m.end()
        if m.group(1):
            stack.append([])
        elif m.group(2):
            if len(stack) == 1:
                raise TermFormatError("unbalanced ')'")
            done = stack.pop()
            stack[-1].append(done)
        elif m.group(3) is not None:
            stack[-1].append(_Str(m.group(3)))
        else:
            stack[-1].append(m.group(4))
    if len(stack) != 1:
        raise TermFormatError("unbalanced '('")
    if len(stack[0]) != 1:
        raise TermFormatError("expected exactly one top-level expression")
    return stack[0][0]


# ============================================================================
# READING
# ============================================================================

def _term(x):
    if isinstance(x, list):
        if not x or x[0] not in ARITY:
            raise TermFormatError(f"unknown term operator in {x!r}")
        return NApp(x[0], tuple(_term(a) for a in x[1:]))
    if x.isdigit():
        return NNum(int(x))
    return NVar(x)


def _formula(x):
    if not isinstance(x, list) or not x:
        raise TermFormatError(f"expected a formula, got {x!r}")
    head, args = x[0], x[1:]
    try:
        if head in NEGATED_RELATION:
            return Prime(head, _term(args[0]), _term(args[1]))
        if head == 'in':
            return Mem(_term(args[0]))
        if head == 'notin':
            return NotMem(_term(args[0]))
        if head in ('and', 'or'):
            cls = And if head == 'and' else Or
            return cls(_formula(args[0]), _formula(args[1]))
        if head in ('exn', 'alln'):
            cls = ExN if head == 'exn' else AllN
            return cls(NVar(args[0]), _formula(args[1]))
    except IndexError:
        raise TermFormatError(f"too few arguments in ({head} ...)")
    raise TermFormatError(f"unknown formula head {head!r}")


def _int(x) -> int:
    try:
        return int(x)
    except (TypeError, ValueError):
        raise TermFormatError(f"expected an integer, got {x!r}")


def _proof(x) -> ProofTerm:
    if not isinstance(x, list) or not x or x[0] not in TAGS:
        raise TermFormatError(f"expected a proof node, got {x!r:.60}")
    cls = TAGS[x[0]]
    rest = list(x[1:])
    ann = {}
    while len(rest) >= 2 and isinstance(rest[0], str) and rest[0].startswith(':'):
        ann[rest[0]] = rest[1]
        rest = rest[2:]
    try:
        height = parse_ordinal(ann[':h'])
        rank = _int(ann[':r'])
        seq = ann[':seq']
    except KeyError as e:
        raise TermFormatError(f"{x[0]} node without annotation {e}")
    except OrdinalParseError as e:
        raise TermFormatError(f"bad height: {e}")
    if not isinstance(seq, list):
        raise TermFormatError(":seq must be a list of formulas")
    base = (frozenset(_formula(f) for f in seq), height, rank)

    try:
        if cls is AxTruePrime:
            return cls(*base, _formula(rest[0]))
        if cls is AxZeroN:
            return cls(*base)
        if cls in (AxNNegPair, AxFepsStar):
            return cls(*base, _term(rest[0]))
        if cls is RuleN:
            return cls(*base, _term(rest[0]), _proof(rest[1]))
        if cls is RuleAnd:
            return cls(*base, _formula(rest[0]), _proof(rest[1]), _proof(rest[2]))
        if cls is RuleOr:
            return cls(*base, _formula(rest[0]), _int(rest[1]), _proof(rest[2]))
        if cls is RuleExists:
            return cls(*base, _formula(rest[0]), _term(rest[1]), _proof(rest[2]))
        if cls is RuleOmega:
            return cls(*base, _formula(rest[0]), NVar(rest[1]), _proof(rest[2]))
        if cls is CutN:
            return cls(*base, _term(rest[0]), _proof(rest[1]), _proof(rest[2]))
        if cls in (CutPrime, CutFepsStar):
            return cls(*base, _formula(rest[0]), _proof(rest[1]), _proof(rest[2]))
        if cls is Accum:
            return cls(*base, _proof(rest[0]))
        witness = None if rest[1] == 'nil' else _int(rest[1])
        return Inv(*base, _formula(rest[0]), witness, _proof(rest[2]))
    except IndexError:
        raise TermFormatError(f"{x[0]} node has too few fields")


def read_term(text: str) -> ProofTerm:
    """Parse one proof term; raises TermFormatError"""
    return _proof(_read_tree(text))


# ============================================================================
# WRITING
# ============================================================================

def write_nterm(t) -> str:
    if isinstance(t, NNum):
        return str(t.value)
    if isinstance(t, NVar):
        return t.name
    return '(' + ' '.join([t.op] + [write_nterm(a) for a in t.args]) + ')'


def write_formula(phi) -> str:
    if isinstance(phi, Prime):
        return f"({phi.rel} {write_nterm(phi.left)} {write_nterm(phi.right)})"
    if isinstance(phi, Mem):
        return f"(in {write_nterm(phi.term)})"
    if isinstance(phi, NotMem):
        return f"(notin {write_nterm(phi.term)})"
    if isinstance(phi, (And, Or)):
        head = 'and' if isinstance(phi, And) else 'or'
        return f"({head} {write_formula(phi.left)} {write_formula(phi.right)})"
    head = 'exn' if isinstance(phi, ExN) else 'alln'
    return f"({head} {phi.var.name} {write_formula(phi.body)})"


def _fields(h: ProofTerm) -> List[Union[str, ProofTerm]]:
    if isinstance(h, AxTruePrime):
        return [write_formula(h.formula)]
    if isinstance(h, AxZeroN):
        return []
    if isinstance(h, (AxNNegPair, AxFepsStar)):
        return [write_nterm(h.term)]
    if isinstance(h, RuleN):
        return [write_nterm(h.term), h.sub]
    if isinstance(h, RuleAnd):
        return [write_formula(h.principal), h.sub0, h.sub1]
    if isinstance(h, RuleOr):
        return [write_formula(h.principal), str(h.side), h.sub]
    if isinstance(h, RuleExists):
        return [write_formula(h.principal), write_nterm(h.witness), h.sub]
    if isinstance(h, RuleOmega):
        return [write_formula(h.principal), h.var.name, h.template]
    if isinstance(h, CutN):
        return [write_nterm(h.term), h.sub0, h.sub1]
    if isinstance(h, (CutPrime, CutFepsStar)):
        return [write_formula(h.formula), h.sub0, h.sub1]
    if isinstance(h, Accum):
        return [h.sub]
    return [write_formula(h.formula), 'nil' if h.witness is None else str(h.witness), h.sub]


def write_term(h: ProofTerm, indent: int = 0) -> str:
    """Render a proof term; sequents are sorted so output is stable"""
    pad = '  ' * indent
    seq = ' '.join(sorted(write_formula(f) for f in h.sequent))
    head = f'{pad}({h.tag} :h "{format_ordinal(h.height)}" :r {h.rank} :seq ({seq})'
    parts = _fields(h)
    atoms = [p for p in parts if isinstance(p, str)]
    subs = [p for p in parts if isinstance(p, ProofTerm)]
    if atoms:
        head += ' ' + ' '.join(atoms)
    if not subs:
        return head + ')'
    body = '\n'.join(write_term(s, indent + 1) for s in subs)
    return head + '\n' + body + ')'
