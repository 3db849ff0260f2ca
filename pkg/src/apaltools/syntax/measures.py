"""Complexity measures, induction orders and fragment classification."""
from dataclasses import dataclass
from typing import Callable, Iterable

from apaltools.syntax.formula import (
    Announce,
    Atom,
    Bottom,
    Box,
    Formula,
    Know,
    Neg,
    Or,
    children,
    walk,
)

ORDERS = ("size", "dbox", "size_dbox", "strict_subformula")


def size(f: Formula) -> int:
    """Weighted symbol count; an announcement weighs its continuation three times.

    Args:
        f (Formula): The formula to measure.

    Returns:
        int: Size(f), e.g. 4 for [p]q.
    """
    if isinstance(f, (Atom, Bottom)):
        return 1
    if isinstance(f, (Neg, Know, Box)):
        return size(f.child) + 1
    if isinstance(f, Or):
        return size(f.left) + size(f.right) + 1
    if isinstance(f, Announce):
        return size(f.announced) + 3 * size(f.continuation)
    raise TypeError(f"Not a formula: {f!r}")


def box_depth(f: Formula) -> int:
    """Number of stacked box operators."""
    if isinstance(f, Box):
        return box_depth(f.child) + 1
    return max((box_depth(child) for child in children(f)), default=0)


def subformulas(f: Formula, include_self: bool = False) -> frozenset:
    """Set of proper subformulas of f, optionally joined with f itself."""
    found = frozenset(g for path, g in walk(f) if path)
    return found | {f} if include_self else found


def less(f: Formula, g: Formula, order: str = "size_dbox") -> bool:
    """Decide f < g in one of the strict orders on formulas.

    Args:
        f (Formula): Left-hand formula.
        g (Formula): Right-hand formula.
        order (str): One of "size", "dbox", "size_dbox" (lexicographic on
            box depth, then size) or "strict_subformula" (f is a proper
            subformula of g). Defaults to "size_dbox".

    Raises:
        ValueError: If order is unknown.

    Returns:
        bool: Whether f is strictly below g.
    """
    if order == "size":
        return size(f) < size(g)
    if order == "dbox":
        return box_depth(f) < box_depth(g)
    if order == "size_dbox":
        return (box_depth(f), size(f)) < (box_depth(g), size(g))
    if order == "strict_subformula":
        return f in subformulas(g)
    raise ValueError(f"Unknown order: {order}. Choose one of {ORDERS}.")


@dataclass(frozen=True)
class FragmentFlags:
    box_free: bool
    announcement_free: bool

    @property
    def epistemic(self) -> bool:
        return self.box_free and self.announcement_free


def classify(f: Formula) -> FragmentFlags:
    nodes = [g for _, g in walk(f)]
    return FragmentFlags(
        box_free=not any(isinstance(g, Box) for g in nodes),
        announcement_free=not any(isinstance(g, Announce) for g in nodes),
    )


def is_epistemic(f: Formula) -> bool:
    return classify(f).epistemic


@dataclass(frozen=True)
class OrderingRow:
    """One row of the ordering table consulted by the completeness induction.

    build(phi, psi, chi, agent) returns the pair (smaller, larger).
    requires_epistemic marks the rows that only hold for epistemic phi, and
    side_condition(phi, psi, chi) any further restriction on the row.
    """

    name: str
    build: Callable[[Formula, Formula, Formula, str], tuple[Formula, Formula]]
    requires_epistemic: bool = False
    side_condition: Callable[[Formula, Formula, Formula], bool] = lambda phi, psi, chi: True


def ordering_rows() -> list[OrderingRow]:
    return [
        OrderingRow("phi < ~phi", lambda phi, psi, chi, a: (phi, Neg(phi))),
        OrderingRow("phi < phi | psi", lambda phi, psi, chi, a: (phi, Or(phi, psi))),
        OrderingRow("psi < phi | psi", lambda phi, psi, chi, a: (psi, Or(phi, psi))),
        OrderingRow("phi < K a phi", lambda phi, psi, chi, a: (phi, Know(a, phi))),
        OrderingRow(
            "[phi] psi < box psi",
            lambda phi, psi, chi, a: (Announce(phi, psi), Box(psi)),
            requires_epistemic=True,
        ),
        OrderingRow("phi < [phi] p", lambda phi, psi, chi, a: (phi, Announce(phi, Atom("p")))),
        OrderingRow("phi < [phi] false", lambda phi, psi, chi, a: (phi, Announce(phi, Bottom()))),
        OrderingRow(
            "phi < [phi] ~psi",
            lambda phi, psi, chi, a: (phi, Announce(phi, Neg(psi))),
        ),
        OrderingRow(
            "[phi] psi < [phi] ~psi",
            lambda phi, psi, chi, a: (Announce(phi, psi), Announce(phi, Neg(psi))),
        ),
        OrderingRow(
            "[phi] psi < [phi] (psi | chi)",
            lambda phi, psi, chi, a: (Announce(phi, psi), Announce(phi, Or(psi, chi))),
        ),
        OrderingRow(
            "[phi] chi < [phi] (psi | chi)",
            lambda phi, psi, chi, a: (Announce(phi, chi), Announce(phi, Or(psi, chi))),
        ),
        OrderingRow(
            "phi < [phi] K a psi",
            lambda phi, psi, chi, a: (phi, Announce(phi, Know(a, psi))),
        ),
        OrderingRow(
            "K a [phi] psi < [phi] K a psi",
            lambda phi, psi, chi, a: (Know(a, Announce(phi, psi)), Announce(phi, Know(a, psi))),
        ),
        OrderingRow(
            "[~[phi] ~psi] chi < [phi] [psi] chi",
            lambda phi, psi, chi, a: (
                Announce(Neg(Announce(phi, Neg(psi))), chi),
                Announce(phi, Announce(psi, chi)),
            ),
        ),
        # Descends only when box_depth(chi) <= box_depth(psi); with a deeper
        # chi both sides share the box depth and the left side is larger.
        OrderingRow(
            "[chi] [phi] psi < [chi] box psi",
            lambda phi, psi, chi, a: (Announce(chi, Announce(phi, psi)), Announce(chi, Box(psi))),
            requires_epistemic=True,
            side_condition=lambda phi, psi, chi: box_depth(chi) <= box_depth(psi),
        ),
    ]


@dataclass(frozen=True)
class InductionCase:
    """A completeness induction case: the formulas its induction step consults."""

    name: str
    premises: tuple[Formula, ...]


def induction_case(f: Formula, announcements: Iterable[Formula] = ()) -> InductionCase:
    """Classify f into one of the 13 completeness induction cases.

    Args:
        f (Formula): The formula the induction step is about.
        announcements (Iterable[Formula]): Finite sample of epistemic
            formulas standing in for "all epistemic announcements" in the
            two box cases.

    Returns:
        InductionCase: The case name and the formulas the step relies on.
    """
    sample = tuple(announcements)
    if isinstance(f, Atom):
        return InductionCase("atom", ())
    if isinstance(f, Bottom):
        return InductionCase("bottom", ())
    if isinstance(f, Neg):
        return InductionCase("negation", (f.child,))
    if isinstance(f, Or):
        return InductionCase("disjunction", (f.left, f.right))
    if isinstance(f, Know):
        return InductionCase("knowledge", (f.child,))
    if isinstance(f, Box):
        return InductionCase("box", tuple(Announce(chi, f.child) for chi in sample))

    psi, rest = f.announced, f.continuation
    if isinstance(rest, Atom):
        return InductionCase("announce_atom", (psi,))
    if isinstance(rest, Bottom):
        return InductionCase("announce_bottom", (psi,))
    if isinstance(rest, Neg):
        return InductionCase("announce_negation", (psi, Neg(Announce(psi, rest.child))))
    if isinstance(rest, Or):
        return InductionCase(
            "announce_disjunction",
            (Announce(psi, rest.left), Announce(psi, rest.right)),
        )
    if isinstance(rest, Know):
        return InductionCase(
            "announce_knowledge",
            (psi, Know(rest.agent, Announce(psi, rest.child))),
        )
    if isinstance(rest, Announce):
        return InductionCase(
            "announce_announce",
            (Announce(Neg(Announce(psi, Neg(rest.announced))), rest.continuation),),
        )
    return InductionCase(
        "announce_box",
        tuple(Announce(psi, Announce(theta, rest.child)) for theta in sample),
    )
