"""Canonical, minimally parenthesised rendering of formulas.

The printer recognises the abbreviation patterns produced by the parser
(->, &, <->, true, M a, <.>, dia) and prints them with their own tokens,
so that rendering and parsing are inverse to each other.
"""
from typing import Optional

from apaltools.syntax.formula import Announce, Atom, Bottom, Box, Formula, Know, Neg, Or

# Binding strength; larger binds tighter.
PREC_IFF = 1
PREC_IMPLIES = 2
PREC_OR = 3
PREC_AND = 4
PREC_UNARY = 5


def _as_implication(f: Formula) -> Optional[tuple[Formula, Formula]]:
    if isinstance(f, Or) and isinstance(f.left, Neg):
        return f.left.child, f.right
    return None


def _as_equivalence(f: Formula) -> Optional[tuple[Formula, Formula]]:
    """Match ~(~(~a | b) | ~(~b | a)), the expansion of a <-> b."""
    if not (isinstance(f, Neg) and isinstance(f.child, Or)):
        return None
    left, right = f.child.left, f.child.right
    if not (isinstance(left, Neg) and isinstance(right, Neg)):
        return None
    forward, backward = _as_implication(left.child), _as_implication(right.child)
    if forward is None or backward is None:
        return None
    if forward[0] == backward[1] and forward[1] == backward[0]:
        return forward
    return None


def _as_conjunction(f: Formula) -> Optional[tuple[Formula, Formula]]:
    if (
        isinstance(f, Neg)
        and isinstance(f.child, Or)
        and isinstance(f.child.left, Neg)
        and isinstance(f.child.right, Neg)
    ):
        return f.child.left.child, f.child.right.child
    return None


def _wrap(text: str, prec: int, required: int) -> str:
    return f"({text})" if prec < required else text


def _render(f: Formula) -> tuple[str, int]:
    """Render f, returning the text and the precedence of its top operator."""
    if isinstance(f, Atom):
        return f.name, PREC_UNARY
    if isinstance(f, Bottom):
        return "false", PREC_UNARY

    equivalence = _as_equivalence(f)
    if equivalence is not None:
        left, right = equivalence
        return f"{_operand(left, PREC_IFF + 1)} <-> {_operand(right, PREC_IFF)}", PREC_IFF

    conjunction = _as_conjunction(f)
    if conjunction is not None:
        left, right = conjunction
        return f"{_operand(left, PREC_AND)} & {_operand(right, PREC_AND + 1)}", PREC_AND

    implication = _as_implication(f)
    if implication is not None:
        left, right = implication
        return (
            f"{_operand(left, PREC_IMPLIES + 1)} -> {_operand(right, PREC_IMPLIES)}",
            PREC_IMPLIES,
        )

    if isinstance(f, Or):
        return f"{_operand(f.left, PREC_OR)} | {_operand(f.right, PREC_OR + 1)}", PREC_OR

    if isinstance(f, Neg):
        inner = f.child
        if isinstance(inner, Bottom):
            return "true", PREC_UNARY
        if isinstance(inner, Know) and isinstance(inner.child, Neg):
            return f"M {inner.agent} {_operand(inner.child.child, PREC_UNARY)}", PREC_UNARY
        if isinstance(inner, Announce) and isinstance(inner.continuation, Neg):
            announced = render(inner.announced)
            rest = _operand(inner.continuation.child, PREC_UNARY)
            return f"<{announced}> {rest}", PREC_UNARY
        if isinstance(inner, Box) and isinstance(inner.child, Neg):
            return f"dia {_operand(inner.child.child, PREC_UNARY)}", PREC_UNARY
        return f"~{_operand(inner, PREC_UNARY)}", PREC_UNARY

    if isinstance(f, Know):
        return f"K {f.agent} {_operand(f.child, PREC_UNARY)}", PREC_UNARY
    if isinstance(f, Announce):
        return f"[{render(f.announced)}] {_operand(f.continuation, PREC_UNARY)}", PREC_UNARY
    if isinstance(f, Box):
        return f"box {_operand(f.child, PREC_UNARY)}", PREC_UNARY
    raise TypeError(f"Not a formula: {f!r}")


def _operand(f: Formula, required: int) -> str:
    text, prec = _render(f)
    return _wrap(text, prec, required)


def render(f: Formula) -> str:
    """Render a formula in the concrete syntax accepted by parse.

    Args:
        f (Formula): The formula to render.

    Returns:
        str: Minimally parenthesised text, e.g. "[p] box q".
    """
    return _render(f)[0]
