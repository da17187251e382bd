"""
Parser for the canonical text produced by syntax.printer.render
"""

import re
from typing import List

from ordinals import OrdinalParseError, parse_ordinal
from syntax.ast import (
    Term, Formula, PredicateAbstract, Var, Zero, Succ, Add, Mul, OAdd, OrdLit, Tower, WPow,
    WMul, Fund, Eq, Prec, RApp, FGraph, IGraph, Not, And, Or, Imp, Iff, Forall, Exists,
)


class FormulaParseError(ValueError):
    """Text outside the term/formula grammar"""


_TOKEN = re.compile(r'\s*(<->|->|/\\|\\/|\+\+|\[[^\]]*\]|[A-Za-z]+\d*|\d+|[()~=<+*,.\\])')
_VAR = re.compile(r'([a-z]+)(\d+)$')
_KEYWORDS = {'all', 'ex', 'tw', 'wp', 'wm', 'fs', 'S', 'R', 'F', 'I'}

_TERM_OPS = {'+': Add, '*': Mul, '++': OAdd}
_FORMULA_OPS = {'/\\': And, '\\/': Or, '->': Imp, '<->': Iff}
_TERM_FUNS = {'S': Succ, 'tw': Tower, 'wp': WPow}
_TERM_PAIRS = {'wm': WMul, 'fs': Fund}


def _tokenize(text: str) -> List[str]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormulaParseError(f"unexpected character at {pos} in {text!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.pos = 0
        self.failed_terms = set()

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, expected: str = None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise FormulaParseError(
                f"expected {expected or 'more input'} at token {self.pos} in {self.text!r}")
        self.pos += 1
        return tok

    def done(self):
        if self.pos != len(self.toks):
            raise FormulaParseError(f"trailing input at token {self.pos} in {self.text!r}")

    def var(self) -> Var:
        tok = self.take()
        m = _VAR.match(tok)
        if not m or tok in _KEYWORDS:
            raise FormulaParseError(f"expected a variable, got {tok!r}")
        return Var(m.group(1), int(m.group(2)))

    def term(self) -> Term:
        tok = self.peek()
        if tok == '0':
            self.take()
            return Zero()
        if tok in _TERM_FUNS:
            self.take()
            self.take('(')
            arg = self.term()
            self.take(')')
            return _TERM_FUNS[tok](arg)
        if tok in _TERM_PAIRS:
            self.take()
            left, right = self.arguments(2)
            return _TERM_PAIRS[tok](left, right)
        if tok is not None and tok.startswith('['):
            self.take()
            try:
                return OrdLit(parse_ordinal(tok[1:-1]))
            except OrdinalParseError as e:
                raise FormulaParseError(str(e)) from e
        if tok == '(':
            start = self.pos
            if start in self.failed_terms:
                raise FormulaParseError(f"no term at token {start}")
            try:
                self.take('(')
                left = self.term()
                op = self.take()
                if op not in _TERM_OPS:
                    raise FormulaParseError(f"expected a term operator, got {op!r}")
                right = self.term()
                self.take(')')
                return _TERM_OPS[op](left, right)
            except FormulaParseError:
                self.failed_terms.add(start)
                self.pos = start
                raise
        return self.var()

    def formula(self) -> Formula:
        tok = self.peek()
        if tok == '~':
            self.take()
            return Not(self.formula())
        if tok in ('all', 'ex'):
            self.take()
            v = self.var()
            body = self.formula()
            return Forall(v, body) if tok == 'all' else Exists(v, body)
        if tok == 'R':
            self.take()
            self.take('(')
            arg = self.term()
            self.take(')')
            return RApp(arg)
        if tok == 'F':
            self.take()
            return FGraph(*self.arguments(3))
        if tok == 'I':
            self.take()
            return IGraph(*self.arguments(4))
        if tok == '(':
            start = self.pos
            try:
                return self.prime()
            except FormulaParseError:
                self.pos = start
            self.take('(')
            left = self.formula()
            op = self.take()
            if op not in _FORMULA_OPS:
                raise FormulaParseError(f"expected a connective, got {op!r} in {self.text!r}")
            right = self.formula()
            self.take(')')
            return _FORMULA_OPS[op](left, right)
        return self.prime()

    def arguments(self, count: int) -> List[Term]:
        self.take('(')
        args = [self.term()]
        for _ in range(count - 1):
            self.take(',')
            args.append(self.term())
        self.take(')')
        return args

    def prime(self) -> Formula:
        left = self.term()
        rel = self.take()
        if rel == '=':
            return Eq(left, self.term())
        if rel == '<':
            return Prec(left, self.term())
        raise FormulaParseError(f"expected = or <, got {rel!r} in {self.text!r}")

    def abstract(self) -> PredicateAbstract:
        self.take('\\')
        v = self.var()
        self.take('.')
        return PredicateAbstract(v, self.formula())


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    p.done()
    return t


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    p.done()
    return f


def parse_abstract(text: str) -> PredicateAbstract:
    p = _Parser(text)
    a = p.abstract()
    p.done()
    return a


def parse_var(text: str) -> Var:
    p = _Parser(text)
    v = p.var()
    p.done()
    return v
