"""
Cantor-normal-form notations for ordinals up to epsilon_0

An ordinal below eps0 is a tuple of (exponent, coefficient) pairs with strictly
decreasing exponents; eps0 itself is a separate top-level value.
"""

from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from typing import Tuple
import re
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import TOWER_DEPTH_CAP


class OrdinalError(ValueError):
    """Operation outside the notation system (eps0 operands, depth cap)"""


class OrdinalParseError(OrdinalError):
    """Text that is not in the ordinal grammar"""


class Comparison(Enum):
    LESS = 'Less'
    EQUAL = 'Equal'
    GREATER = 'Greater'


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    terms: Tuple[Tuple['Ordinal', int], ...] = ()
    eps0: bool = False

    def __lt__(self, other: 'Ordinal') -> bool:
        return _cmp(self, other) < 0

    @property
    def is_zero(self) -> bool:
        return not self.eps0 and not self.terms

    @property
    def is_successor(self) -> bool:
        return not self.eps0 and bool(self.terms) and self.terms[-1][0].is_zero

    @property
    def is_limit(self) -> bool:
        return self.eps0 or (bool(self.terms) and not self.terms[-1][0].is_zero)

    @property
    def is_finite(self) -> bool:
        return not self.eps0 and all(e.is_zero for e, _ in self.terms)

    def as_int(self) -> int:
        if not self.is_finite:
            raise OrdinalError(f"{format_ordinal(self)} is not a natural number")
        return self.terms[0][1] if self.terms else 0

    def __str__(self) -> str:
        return format_ordinal(self)


ZERO = Ordinal()
EPSILON_ZERO = Ordinal(eps0=True)


def nat(n: int) -> Ordinal:
    """Embed a natural number as omega^0 * n"""
    if n < 0:
        raise OrdinalError("negative natural number")
    return ZERO if n == 0 else Ordinal(((ZERO, n),))


ONE = nat(1)
OMEGA = Ordinal(((ONE, 1),))


def _cmp(a: Ordinal, b: Ordinal) -> int:
    if a.eps0 or b.eps0:
        return (a.eps0 > b.eps0) - (a.eps0 < b.eps0)
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = _cmp(ea, eb)
        if c:
            return c
        if ca != cb:
            return 1 if ca > cb else -1
    return (len(a.terms) > len(b.terms)) - (len(a.terms) < len(b.terms))


def compare(a: Ordinal, b: Ordinal) -> Comparison:
    c = _cmp(a, b)
    if c < 0:
        return Comparison.LESS
    if c > 0:
        return Comparison.GREATER
    return Comparison.EQUAL


def _reject_eps0(*args: Ordinal) -> None:
    for a in args:
        if a.eps0:
            raise OrdinalError("eps0 is not a valid operand here")


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    """
    Ordinal sum in CNF; terms of a below the leading exponent of b are absorbed

    Args:
        a: left summand (not eps0)
        b: right summand (not eps0)

    Returns:
        CNF of a + b
    """
    _reject_eps0(a, b)
    if b.is_zero:
        return a
    lead_exp, lead_coeff = b.terms[0]
    kept = []
    for e, c in a.terms:
        order = _cmp(e, lead_exp)
        if order > 0:
            kept.append((e, c))
        elif order == 0:
            lead_coeff += c
            break
        else:
            break
    return Ordinal(tuple(kept) + ((lead_exp, lead_coeff),) + b.terms[1:])


def successor(a: Ordinal) -> Ordinal:
    return add(a, ONE)


def predecessor(a: Ordinal) -> Ordinal:
    if not a.is_successor:
        raise OrdinalError(f"{format_ordinal(a)} has no predecessor")
    e, c = a.terms[-1]
    return Ordinal(a.terms[:-1] + (((e, c - 1),) if c > 1 else ()))


def omega_power(a: Ordinal) -> Ordinal:
    _reject_eps0(a)
    return Ordinal(((a, 1),))


def omega_tower(a: Ordinal, n: int) -> Ordinal:
    """omega^a_n: omega^a_0 = a and omega^a_(n+1) = omega^(omega^a_n)"""
    if n > TOWER_DEPTH_CAP:
        raise OrdinalError(f"tower depth {n} exceeds cap {TOWER_DEPTH_CAP}")
    result = a
    for _ in range(n):
        result = omega_power(result)
    return result


def fund_seq(a: Ordinal, n: int) -> Ordinal:
    """
    n-th member of the fundamental sequence of a

    {0}(n) = n, {a+1}(n) = a, {eps0}(n) = omega_(n+1) and at limits
    {b + w^g}(n) = b + w^{g}(n) for limit g, b + w^d * (n+1) for g = d+1.
    """
    if a.eps0:
        return omega_tower(ONE, n + 1)
    if a.is_zero:
        return nat(n)
    if a.is_successor:
        return predecessor(a)

    g, c = a.terms[-1]
    prefix = Ordinal(a.terms[:-1] + (((g, c - 1),) if c > 1 else ()))
    if g.is_successor:
        last = Ordinal(((predecessor(g), n + 1),))
    else:
        last = omega_power(fund_seq(g, n))
    return add(prefix, last)


def mesh(b: Ordinal, a: Ordinal) -> bool:
    """True iff the least exponent of b is >= the greatest exponent of a"""
    _reject_eps0(b, a)
    if b.is_zero or a.is_zero:
        return True
    return _cmp(b.terms[-1][0], a.terms[0][0]) >= 0


# ============================================================================
# TEXT FORMAT
# ============================================================================

def format_ordinal(a: Ordinal) -> str:
    """Canonical text: 0, eps0, w^(E)*c + ... with ^(1) and *1 omitted"""
    if a.eps0:
        return 'eps0'
    if a.is_zero:
        return '0'
    parts = []
    for e, c in a.terms:
        if e.is_zero:
            parts.append(str(c))
            continue
        part = 'w' if e == ONE else f"w^({format_ordinal(e)})"
        if c != 1:
            part += f"*{c}"
        parts.append(part)
    return ' + '.join(parts)


_TOKEN = re.compile(r'\s*(eps0|\d+|w|\^|\(|\)|\*|\+)')


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise OrdinalParseError(f"unexpected character at {pos} in {text!r}")
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list, text: str):
        self.tokens = tokens
        self.pos = 0
        self.text = text

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected: str = None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise OrdinalParseError(f"expected {expected or 'token'} in {self.text!r}")
        self.pos += 1
        return tok

    def sum(self) -> Ordinal:
        total = self.term()
        while self.peek() == '+':
            self.take('+')
            total = add(total, self.term())
        return total

    def term(self) -> Ordinal:
        tok = self.take()
        if tok.isdigit():
            return nat(int(tok))
        if tok != 'w':
            raise OrdinalParseError(f"unexpected {tok!r} in {self.text!r}")
        exponent = ONE
        if self.peek() == '^':
            self.take('^')
            self.take('(')
            exponent = self.sum()
            self.take(')')
        coeff = 1
        if self.peek() == '*':
            self.take('*')
            digits = self.take()
            if not digits.isdigit() or int(digits) == 0:
                raise OrdinalParseError(f"bad coefficient in {self.text!r}")
            coeff = int(digits)
        return Ordinal(((exponent, coeff),))


def parse_ordinal(text: str) -> Ordinal:
    tokens = _tokenize(text)
    if tokens == ['eps0']:
        return EPSILON_ZERO
    if not tokens or 'eps0' in tokens:
        raise OrdinalParseError(f"not an ordinal: {text!r}")
    parser = _Parser(tokens, text)
    value = parser.sum()
    if parser.peek() is not None:
        raise OrdinalParseError(f"trailing input in {text!r}")
    return value
