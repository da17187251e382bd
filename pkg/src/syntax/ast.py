"""
Terms and formulas of first-order arithmetic with a predicate variable R,
the ordinal symbols (<, ++, wp, wm, fs, tw, ordinal literals) and the graph
symbols F and I.

Nodes are hash-consed: building the same node twice returns the same object,
so equality is identity and generated proofs share their subformulas. Every
node caches its free variables, its number of R occurrences and its symbol
counts, so substitution can skip untouched subtrees and length is O(1).
"""

import weakref
from dataclasses import dataclass
from typing import FrozenSet

from ordinals import Ordinal

_EMPTY: FrozenSet = frozenset()


class _Interned(type):
    """Metaclass returning the existing node for repeated positional arguments"""

    _table = weakref.WeakValueDictionary()

    def __call__(cls, *args):
        key = (cls,) + args
        node = _Interned._table.get(key)
        if node is None:
            node = super().__call__(*args)
            _Interned._table[key] = node
        return node


class Term(metaclass=_Interned):
    """Base class of term nodes"""

    @property
    def fv(self) -> FrozenSet['Var']:
        return self._fv

    @property
    def r_count(self) -> int:
        return 0


class Formula(metaclass=_Interned):
    """Base class of formula nodes"""

    @property
    def fv(self) -> FrozenSet['Var']:
        return self._fv

    @property
    def r_count(self) -> int:
        return self._r


def _cache(node, fv, r, *parts, extra=0):
    """Store free variables, R count and the normative/raw symbol counts"""
    object.__setattr__(node, '_fv', fv)
    object.__setattr__(node, '_r', r)
    object.__setattr__(node, '_n', extra + sum(p._n for p in parts))
    object.__setattr__(node, '_w', extra + sum(p._w for p in parts))


# ============================================================================
# TERMS
# ============================================================================

@dataclass(frozen=True, eq=False)
class Var(Term):
    prefix: str
    index: int

    def __post_init__(self):
        object.__setattr__(self, '_fv', frozenset((self,)))
        object.__setattr__(self, '_r', 0)
        object.__setattr__(self, '_n', 1)
        object.__setattr__(self, '_w', 1 + len(str(self.index)))

    @property
    def name(self) -> str:
        return f"{self.prefix}{self.index}"


@dataclass(frozen=True, eq=False)
class Zero(Term):
    def __post_init__(self):
        _cache(self, _EMPTY, 0, extra=1)


class _UnaryTerm(Term):
    def __post_init__(self):
        _cache(self, self.arg.fv, 0, self.arg, extra=3)


class _BinaryTerm(Term):
    def __post_init__(self):
        _cache(self, self.left.fv | self.right.fv, 0, self.left, self.right, extra=3)


class _BinaryFunction(Term):
    def __post_init__(self):
        _cache(self, self.left.fv | self.right.fv, 0, self.left, self.right, extra=4)


@dataclass(frozen=True, eq=False)
class Succ(_UnaryTerm):
    arg: Term


@dataclass(frozen=True, eq=False)
class Add(_BinaryTerm):
    left: Term
    right: Term


@dataclass(frozen=True, eq=False)
class Mul(_BinaryTerm):
    left: Term
    right: Term


@dataclass(frozen=True, eq=False)
class OAdd(_BinaryTerm):
    """Ordinal sum, kept apart from the arithmetic +"""
    left: Term
    right: Term


@dataclass(frozen=True, eq=False)
class OrdLit(Term):
    value: Ordinal

    def __post_init__(self):
        _cache(self, _EMPTY, 0, extra=1)


@dataclass(frozen=True, eq=False)
class Tower(_UnaryTerm):
    """tw(t) = omega^1_t"""
    arg: Term


@dataclass(frozen=True, eq=False)
class WPow(_UnaryTerm):
    """wp(t) = omega^t"""
    arg: Term


@dataclass(frozen=True, eq=False)
class WMul(_BinaryFunction):
    """wm(g, x) = omega^g * x"""
    left: Term
    right: Term


@dataclass(frozen=True, eq=False)
class Fund(_BinaryFunction):
    """fs(a, x) = a[x], the fundamental sequence of a at x"""
    left: Term
    right: Term


BINARY_TERMS = (Add, Mul, OAdd)
UNARY_TERMS = (Succ, Tower, WPow)
BINARY_FUNCTIONS = (WMul, Fund)

# ============================================================================
# FORMULAS
# ============================================================================


class _Relation(Formula):
    def __post_init__(self):
        _cache(self, self.left.fv | self.right.fv, 0, self.left, self.right, extra=1)


@dataclass(frozen=True, eq=False)
class Eq(_Relation):
    left: Term
    right: Term


@dataclass(frozen=True, eq=False)
class Prec(_Relation):
    """Ordinal order t < s"""
    left: Term
    right: Term


@dataclass(frozen=True, eq=False)
class RApp(Formula):
    arg: Term

    def __post_init__(self):
        _cache(self, self.arg.fv, 1, self.arg, extra=3)


@dataclass(frozen=True, eq=False)
class FGraph(Formula):
    """F(a, x, y): the graph F_a(x) = y"""
    index: Term
    arg: Term
    value: Term

    def __post_init__(self):
        _cache(self, self.index.fv | self.arg.fv | self.value.fv, 0,
               self.index, self.arg, self.value, extra=5)


@dataclass(frozen=True, eq=False)
class IGraph(Formula):
    """I(a, i, x, y): the i-th iterate of F_a sends x to y"""
    index: Term
    count: Term
    arg: Term
    value: Term

    def __post_init__(self):
        _cache(self, self.index.fv | self.count.fv | self.arg.fv | self.value.fv, 0,
               self.index, self.count, self.arg, self.value, extra=6)


@dataclass(frozen=True, eq=False)
class Not(Formula):
    body: Formula

    def __post_init__(self):
        _cache(self, self.body.fv, self.body.r_count, self.body, extra=1)


class _Binary(Formula):
    def __post_init__(self):
        _cache(self, self.left.fv | self.right.fv, self.left.r_count + self.right.r_count,
               self.left, self.right, extra=3)


@dataclass(frozen=True, eq=False)
class And(_Binary):
    left: Formula
    right: Formula


@dataclass(frozen=True, eq=False)
class Or(_Binary):
    left: Formula
    right: Formula


@dataclass(frozen=True, eq=False)
class Imp(_Binary):
    left: Formula
    right: Formula


@dataclass(frozen=True, eq=False)
class Iff(_Binary):
    left: Formula
    right: Formula


class _Quantifier(Formula):
    def __post_init__(self):
        _cache(self, self.body.fv - {self.var}, self.body.r_count, self.var, self.body, extra=1)


@dataclass(frozen=True, eq=False)
class Forall(_Quantifier):
    var: Var
    body: Formula


@dataclass(frozen=True, eq=False)
class Exists(_Quantifier):
    var: Var
    body: Formula


PRIME_FORMULAS = (Eq, Prec, RApp, FGraph, IGraph)
BINARY_FORMULAS = (And, Or, Imp, Iff)
QUANTIFIERS = (Forall, Exists)


@dataclass(frozen=True)
class PredicateAbstract:
    """gamma-hat psi: the formula psi read as a predicate of var"""
    var: Var
    body: Formula

    @property
    def fv(self) -> FrozenSet[Var]:
        return self.body.fv - {self.var}

    @property
    def r_count(self) -> int:
        return self.body.r_count
