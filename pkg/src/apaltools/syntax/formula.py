"""Abstract syntax of arbitrary public announcement logic.

Only the primitive constructs are node types. Derived connectives are
built by the constructor functions at the bottom of this module and never
stored as distinct nodes.
"""
import re
from dataclasses import dataclass
from typing import Iterator

Path = tuple[int, ...]

ATOM_NAME = re.compile(r"[a-z][a-z0-9_]*")
RESERVED_WORDS = frozenset({"box", "dia", "true", "false"})


@dataclass(frozen=True)
class Formula:
    """Base class of all formula nodes."""


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not ATOM_NAME.fullmatch(self.name) or self.name in RESERVED_WORDS:
            raise ValueError(
                f"Invalid atom name {self.name!r}: expected [a-z][a-z0-9_]* "
                f"other than {', '.join(sorted(RESERVED_WORDS))}.",
            )


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Neg(Formula):
    child: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Know(Formula):
    agent: str
    child: Formula

    def __post_init__(self):
        if not self.agent:
            raise ValueError("Agent names must be nonempty.")


@dataclass(frozen=True)
class Announce(Formula):
    announced: Formula
    continuation: Formula


@dataclass(frozen=True)
class Box(Formula):
    child: Formula


def children(f: Formula) -> tuple[Formula, ...]:
    """Immediate subformulas of f, in path-index order."""
    if isinstance(f, (Neg, Know, Box)):
        return (f.child,)
    if isinstance(f, Or):
        return (f.left, f.right)
    if isinstance(f, Announce):
        return (f.announced, f.continuation)
    return ()


def with_children(f: Formula, new_children: tuple[Formula, ...]) -> Formula:
    """Rebuild f with its immediate subformulas replaced."""
    if isinstance(f, Neg):
        return Neg(*new_children)
    if isinstance(f, Know):
        return Know(f.agent, *new_children)
    if isinstance(f, Box):
        return Box(*new_children)
    if isinstance(f, Or):
        return Or(*new_children)
    if isinstance(f, Announce):
        return Announce(*new_children)
    return f


def subformula_at(f: Formula, path: Path) -> Formula:
    for index in path:
        f = children(f)[index]
    return f


def replace_at(f: Formula, path: Path, replacement: Formula) -> Formula:
    """Return f with the subformula at path replaced by replacement."""
    if not path:
        return replacement
    head, rest = path[0], path[1:]
    new_children = list(children(f))
    new_children[head] = replace_at(new_children[head], rest, replacement)
    return with_children(f, tuple(new_children))


def walk(f: Formula, path: Path = ()) -> Iterator[tuple[Path, Formula]]:
    """Yield (path, subformula) pairs in pre-order, f itself first."""
    yield path, f
    for index, child in enumerate(children(f)):
        yield from walk(child, path + (index,))


def node_count(f: Formula) -> int:
    return sum(1 for _ in walk(f))


def atoms(f: Formula) -> frozenset:
    return frozenset(g.name for _, g in walk(f) if isinstance(g, Atom))


def agents(f: Formula) -> frozenset:
    return frozenset(g.agent for _, g in walk(f) if isinstance(g, Know))


# Abbreviations.


def top() -> Formula:
    return Neg(Bottom())


def conj(left: Formula, right: Formula) -> Formula:
    return Neg(Or(Neg(left), Neg(right)))


def implies(antecedent: Formula, consequent: Formula) -> Formula:
    return Or(Neg(antecedent), consequent)


def iff(left: Formula, right: Formula) -> Formula:
    return conj(implies(left, right), implies(right, left))


def possible(agent: str, f: Formula) -> Formula:
    """The dual of knowledge, K^_a f = ~K_a ~f."""
    return Neg(Know(agent, Neg(f)))


def diamond_announce(announced: Formula, continuation: Formula) -> Formula:
    """<announced> continuation = ~[announced] ~continuation."""
    return Neg(Announce(announced, Neg(continuation)))


def diamond(f: Formula) -> Formula:
    """dia f = ~box ~f."""
    return Neg(Box(Neg(f)))
