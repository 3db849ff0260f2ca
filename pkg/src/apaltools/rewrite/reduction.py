"""Reduction of box-free formulas to epistemic formulas.

The reduction axioms are applied left to right as rewrite rules::

    A7   [phi] p           ==>  phi -> p
    A8   [phi] false       ==>  ~phi
    A9   [phi] ~psi        ==>  phi -> ~[phi] psi
    A10  [phi] (psi | chi) ==>  [phi] psi | [phi] chi
    A11  [phi] K a psi     ==>  phi -> K a [phi] psi
    A12  [phi] [psi] chi   ==>  [<phi> psi] chi

The redex is the first announcement in pre-order whose announced formula
contains no announcement. Every step strictly lowers weight(). Size alone
does not decrease under A9 and A11 once -> is expanded.
"""
from dataclasses import dataclass
from typing import Optional

from apaltools.errors import NotBoxFreeError
from apaltools.syntax.formula import (
    Announce,
    Atom,
    Bottom,
    Box,
    Formula,
    Know,
    Neg,
    Or,
    Path,
    diamond_announce,
    implies,
    replace_at,
    subformula_at,
    walk,
)
from apaltools.syntax.measures import classify
from apaltools.syntax.printer import render

RULES = ("A7", "A8", "A9", "A10", "A11", "A12")


def weight(f: Formula) -> int:
    """Multiplicative termination measure; [phi] psi weighs (4 + w(phi)) * w(psi)."""
    if isinstance(f, (Atom, Bottom)):
        return 1
    if isinstance(f, (Neg, Know, Box)):
        return 1 + weight(f.child)
    if isinstance(f, Or):
        return 1 + weight(f.left) + weight(f.right)
    if isinstance(f, Announce):
        return (4 + weight(f.announced)) * weight(f.continuation)
    raise TypeError(f"Not a formula: {f!r}")


@dataclass(frozen=True)
class RewriteStep:
    """One rule application; before and after are whole formulas."""

    rule: str
    position: Path
    before: Formula
    after: Formula

    def __str__(self) -> str:
        return f"{self.rule} @ {format_path(self.position)}: {render(self.before)} ==> {render(self.after)}"


@dataclass(frozen=True)
class RewriteTrace:
    start: Formula
    steps: tuple
    result: Formula


def format_path(path: Path) -> str:
    return ".".join(str(i) for i in path) if path else "root"


def contract(redex: Announce) -> tuple[str, Formula]:
    """Apply the reduction axiom matching the continuation of redex."""
    phi, rest = redex.announced, redex.continuation
    if isinstance(rest, Atom):
        return "A7", implies(phi, rest)
    if isinstance(rest, Bottom):
        return "A8", Neg(phi)
    if isinstance(rest, Neg):
        return "A9", implies(phi, Neg(Announce(phi, rest.child)))
    if isinstance(rest, Or):
        return "A10", Or(Announce(phi, rest.left), Announce(phi, rest.right))
    if isinstance(rest, Know):
        return "A11", implies(phi, Know(rest.agent, Announce(phi, rest.child)))
    if isinstance(rest, Announce):
        return "A12", Announce(diamond_announce(phi, rest.announced), rest.continuation)
    raise NotBoxFreeError(f"no reduction axiom for {render(redex)}")


def _require_box_free(f: Formula) -> None:
    if not classify(f).box_free:
        raise NotBoxFreeError(f"cannot reduce a formula containing box: {render(f)}")


def find_redex(f: Formula) -> Optional[Path]:
    for path, g in walk(f):
        if isinstance(g, Announce) and classify(g.announced).announcement_free:
            return path
    return None


def reduce_step(f: Formula) -> Optional[RewriteStep]:
    """Perform one reduction step.

    Args:
        f (Formula): A box-free formula.

    Raises:
        NotBoxFreeError: If f contains box.

    Returns:
        Optional[RewriteStep]: The step, or None iff f is epistemic.
    """
    _require_box_free(f)
    path = find_redex(f)
    if path is None:
        return None
    rule, contractum = contract(subformula_at(f, path))
    return RewriteStep(rule=rule, position=path, before=f, after=replace_at(f, path, contractum))


def reduce_to_epistemic(f: Formula) -> RewriteTrace:
    """Rewrite f with the reduction axioms until no announcement is left.

    Args:
        f (Formula): A box-free formula.

    Raises:
        NotBoxFreeError: If f contains box.

    Returns:
        RewriteTrace: Every step taken and the epistemic result.
    """
    _require_box_free(f)
    steps = []
    current = f
    step = reduce_step(current)
    while step is not None:
        steps.append(step)
        current = step.after
        step = reduce_step(current)
    return RewriteTrace(start=f, steps=tuple(steps), result=current)


def format_trace(trace: RewriteTrace) -> str:
    """One line per step, followed by the rendered result."""
    lines = [str(step) for step in trace.steps]
    lines.append(render(trace.result))
    return "\n".join(lines)
