"""Concrete grammar and parser for formulas.

Unary operators bind tighter than every binary operator; among the binary
ones & binds tightest, then |, then ->, then <->. | and & associate to the
left, -> and <-> to the right. Derived connectives are expanded while
parsing, so the result only contains primitive nodes.
"""
from functools import lru_cache

from lark import Lark, Transformer
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, UnexpectedToken

from apaltools.errors import FormulaSyntaxError
from apaltools.syntax.formula import (
    Announce,
    Atom,
    Bottom,
    Box,
    Formula,
    Know,
    Neg,
    Or,
    conj,
    diamond,
    diamond_announce,
    iff,
    implies,
    possible,
    top,
)

GRAMMAR = r"""
?start: formula

?formula: implication
    | implication "<->" formula           -> iff
?implication: disjunction
    | disjunction "->" implication        -> implies
?disjunction: conjunction
    | disjunction "|" conjunction         -> or_
?conjunction: unary
    | conjunction "&" unary               -> and_

?unary: "~" unary                         -> neg
    | "K" AGENT unary                     -> know
    | "M" AGENT unary                     -> possible
    | "[" formula "]" unary               -> announce
    | "<" formula ">" unary               -> diamond_announce
    | "box" unary                         -> box
    | "dia" unary                         -> diamond
    | primary

?primary: ATOM                            -> atom
    | "false"                             -> bottom
    | "true"                              -> top
    | "(" formula ")"

ATOM: /[a-z][a-z0-9_]*/
AGENT: /[a-zA-Z][a-zA-Z0-9]*/

%import common.WS
%ignore WS
"""


class FormulaBuilder(Transformer):
    """Turn the lark parse tree into Formula nodes."""

    def atom(self, items):
        return Atom(str(items[0]))

    def bottom(self, _):
        return Bottom()

    def top(self, _):
        return top()

    def neg(self, items):
        return Neg(items[0])

    def know(self, items):
        return Know(str(items[0]), items[1])

    def possible(self, items):
        return possible(str(items[0]), items[1])

    def announce(self, items):
        return Announce(items[0], items[1])

    def diamond_announce(self, items):
        return diamond_announce(items[0], items[1])

    def box(self, items):
        return Box(items[0])

    def diamond(self, items):
        return diamond(items[0])

    def or_(self, items):
        return Or(items[0], items[1])

    def and_(self, items):
        return conj(items[0], items[1])

    def implies(self, items):
        return implies(items[0], items[1])

    def iff(self, items):
        return iff(items[0], items[1])


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(GRAMMAR, parser="lalr", transformer=FormulaBuilder())


def _describe_terminal(name: str) -> str:
    if name == "$END":
        return "end of input"
    try:
        terminal = _parser().get_terminal(name)
    except KeyError:
        return name
    if terminal.pattern.type == "str":
        return repr(terminal.pattern.value)
    return name.lower()


def parse(text: str) -> Formula:
    """Parse a formula from its concrete syntax.

    Args:
        text (str): The formula, e.g. "[p] K a q" or "~(p | q)".

    Raises:
        FormulaSyntaxError: If text does not conform to the grammar. The
            error carries the offending position and the expected tokens.

    Returns:
        Formula: The abstract syntax tree, with derived connectives expanded.

    Example:
        >>> parse("p -> q")
        Or(left=Neg(child=Atom(name='p')), right=Atom(name='q'))
    """
    try:
        return _parser().parse(text)
    except UnexpectedInput as e:
        position = e.pos_in_stream if e.pos_in_stream is not None else len(text)
        if isinstance(e, UnexpectedToken) and e.token.type == "$END":
            expected = e.expected
            message = "unexpected end of input"
            position = len(text)
        elif isinstance(e, UnexpectedToken):
            expected = e.expected
            message = f"unexpected {str(e.token)!r}"
        elif isinstance(e, UnexpectedCharacters):
            expected = e.allowed
            message = f"unknown token starting with {text[position]!r}"
        else:
            expected = getattr(e, "expected", ())
            message = "unexpected input"
        line = text.count("\n", 0, position) + 1
        column = position - (text.rfind("\n", 0, position) + 1) + 1
        raise FormulaSyntaxError(
            message,
            text=text,
            position=position,
            line=line,
            column=column,
            expected=frozenset(_describe_terminal(name) for name in expected or ()),
        ) from None
