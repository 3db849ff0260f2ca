"""Necessity forms: contexts with a single hole, the carrier of rule R4."""
from dataclasses import dataclass

from apaltools.syntax import formula as fm
from apaltools.syntax.formula import Formula


@dataclass(frozen=True)
class NecessityForm:
    """Base class of necessity form nodes."""


@dataclass(frozen=True)
class Hole(NecessityForm):
    pass


@dataclass(frozen=True)
class Implies(NecessityForm):
    antecedent: Formula
    rest: NecessityForm


@dataclass(frozen=True)
class Know(NecessityForm):
    agent: str
    rest: NecessityForm


@dataclass(frozen=True)
class Announce(NecessityForm):
    announced: Formula
    rest: NecessityForm


def fill(nf: NecessityForm, f: Formula) -> Formula:
    """Replace the hole of nf by f.

    Args:
        nf (NecessityForm): The context.
        f (Formula): The formula to plug in.

    Returns:
        Formula: nf with its hole filled, implications expanded to ~a | b.
    """
    if isinstance(nf, Hole):
        return f
    if isinstance(nf, Implies):
        return fm.implies(nf.antecedent, fill(nf.rest, f))
    if isinstance(nf, Know):
        return fm.Know(nf.agent, fill(nf.rest, f))
    if isinstance(nf, Announce):
        return fm.Announce(nf.announced, fill(nf.rest, f))
    raise TypeError(f"Not a necessity form: {nf!r}")
