"""
Canonical rendering and symbol counting

Length is the number of tokens in the canonical rendering, cached on each
node when it is built. Normative mode counts every variable as one symbol;
raw mode charges 1 + the digits of its index. An ordinal literal is a single token.
"""

from typing import Iterator, Union

from ordinals import format_ordinal
from syntax.ast import (
    Term, Formula, PredicateAbstract, Var, Zero, Succ, Add, Mul, OAdd, OrdLit, Tower, WPow,
    WMul, Fund, Eq, Prec, RApp, FGraph, IGraph, Not, And, Or, Imp, Iff, Forall, Exists,
)

Node = Union[Term, Formula, PredicateAbstract]

_BINARY_OPS = {Add: '+', Mul: '*', OAdd: '++', And: '/\\', Or: '\\/', Imp: '->', Iff: '<->'}
_UNARY_FUNS = {Succ: 'S', Tower: 'tw', WPow: 'wp'}
_RELATIONS = {Eq: '=', Prec: '<'}
_FUNCTIONS = {WMul: 'wm', Fund: 'fs'}

_NO_SPACE_AFTER = {'(', 'S', 'R', 'F', 'I', 'tw', 'wp', 'wm', 'fs', '~', '\\'}
_NO_SPACE_BEFORE = {')', ',', '.'}


def tokens(node: Node) -> Iterator[Union[str, Var]]:
    """Tokens of the canonical rendering, variables yielded as Var objects"""
    stack = [node]
    while stack:
        item = stack.pop()
        if isinstance(item, (str, Var)):
            yield item
            continue
        cls = type(item)
        if cls is Zero:
            yield '0'
        elif cls is OrdLit:
            yield f"[{format_ordinal(item.value)}]"
        elif cls in _UNARY_FUNS:
            stack.extend((')', item.arg, '(', _UNARY_FUNS[cls]))
        elif cls in _BINARY_OPS:
            stack.extend((')', item.right, _BINARY_OPS[cls], item.left, '('))
        elif cls in _RELATIONS:
            stack.extend((item.right, _RELATIONS[cls], item.left))
        elif cls is RApp:
            stack.extend((')', item.arg, '(', 'R'))
        elif cls in _FUNCTIONS:
            stack.extend((')', item.right, ',', item.left, '(', _FUNCTIONS[cls]))
        elif cls is FGraph:
            stack.extend((')', item.value, ',', item.arg, ',', item.index, '(', 'F'))
        elif cls is IGraph:
            stack.extend((')', item.value, ',', item.arg, ',', item.count, ',', item.index, '(', 'I'))
        elif cls is Not:
            stack.extend((item.body, '~'))
        elif cls is Forall:
            stack.extend((item.body, item.var, 'all'))
        elif cls is Exists:
            stack.extend((item.body, item.var, 'ex'))
        elif cls is PredicateAbstract:
            stack.extend((item.body, '.', item.var, '\\'))
        else:
            raise TypeError(f"not a syntax node: {item!r}")


def render(node: Node) -> str:
    out = []
    prev = None
    for tok in tokens(node):
        text = tok.name if isinstance(tok, Var) else tok
        if prev is not None and prev not in _NO_SPACE_AFTER and text not in _NO_SPACE_BEFORE:
            out.append(' ')
        out.append(text)
        prev = text
    return ''.join(out)


def length(node: Node, mode: str = 'normative') -> int:
    """
    Symbol count of a term, formula or abstract

    Args:
        node: syntax node
        mode: 'normative' or 'raw'

    Returns:
        number of symbols
    """
    if isinstance(node, PredicateAbstract):
        return 2 + length(node.var, mode) + length(node.body, mode)
    if mode == 'normative':
        return node._n
    if mode == 'raw':
        return node._w
    raise ValueError(f"unknown counting mode: {mode!r}")
