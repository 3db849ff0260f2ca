"""Axiom schemas A1-A13 and matching of formulas against them.

Schemas are formula patterns over metavariables. Agent positions are
metavariables when the agent name starts with "?". A7 is stated for atoms
only, so its metavariable only matches atoms.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np
from wasabi import msg

from apaltools.axioms.tautology import is_tautology_instance
from apaltools.errors import TooManyLettersError
from apaltools.synth_data_generator.synth_formula_generator import gen_formula
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
    diamond_announce,
    iff,
    implies,
    possible,
    walk,
    with_children,
)
from apaltools.syntax.measures import is_epistemic
from apaltools.utils import DEFAULT_AGENTS, DEFAULT_ATOMS, axiom_schemas

AXIOM_NAMES = tuple(f"A{i}" for i in range(14))
SCHEMA_ORDER = AXIOM_NAMES[1:]


@dataclass(frozen=True)
class Meta(Formula):
    """A metavariable standing for a formula (or, with kind="atom", an atom)."""

    name: str
    kind: str = "formula"


@dataclass(frozen=True)
class AxiomSchema:
    name: str
    pattern: Formula
    epistemic: tuple = ()


PHI, PSI, CHI = Meta("phi"), Meta("psi"), Meta("chi")
AGENT = "?a"


@axiom_schemas.register("A1")
def distribution_of_knowledge() -> AxiomSchema:
    return AxiomSchema(
        "A1",
        implies(Know(AGENT, implies(PHI, PSI)), implies(Know(AGENT, PHI), Know(AGENT, PSI))),
    )


@axiom_schemas.register("A2")
def distribution_of_announcement() -> AxiomSchema:
    return AxiomSchema(
        "A2",
        implies(
            Announce(PHI, implies(PSI, CHI)),
            implies(Announce(PHI, PSI), Announce(PHI, CHI)),
        ),
    )


@axiom_schemas.register("A3")
def distribution_of_box() -> AxiomSchema:
    return AxiomSchema("A3", implies(Box(implies(PHI, PSI)), implies(Box(PHI), Box(PSI))))


@axiom_schemas.register("A4")
def truthfulness() -> AxiomSchema:
    return AxiomSchema("A4", implies(Know(AGENT, PHI), PHI))


@axiom_schemas.register("A5")
def positive_introspection() -> AxiomSchema:
    return AxiomSchema("A5", implies(Know(AGENT, PHI), Know(AGENT, Know(AGENT, PHI))))


@axiom_schemas.register("A6")
def symmetry() -> AxiomSchema:
    return AxiomSchema("A6", implies(PHI, Know(AGENT, possible(AGENT, PHI))))


@axiom_schemas.register("A7")
def announce_atom() -> AxiomSchema:
    p = Meta("p", kind="atom")
    return AxiomSchema("A7", iff(Announce(PHI, p), implies(PHI, p)))


@axiom_schemas.register("A8")
def announce_bottom() -> AxiomSchema:
    return AxiomSchema("A8", iff(Announce(PHI, Bottom()), Neg(PHI)))


@axiom_schemas.register("A9")
def announce_negation() -> AxiomSchema:
    return AxiomSchema(
        "A9",
        iff(Announce(PHI, Neg(PSI)), implies(PHI, Neg(Announce(PHI, PSI)))),
    )


@axiom_schemas.register("A10")
def announce_disjunction() -> AxiomSchema:
    return AxiomSchema(
        "A10",
        iff(Announce(PHI, Or(PSI, CHI)), Or(Announce(PHI, PSI), Announce(PHI, CHI))),
    )


@axiom_schemas.register("A11")
def announce_knowledge() -> AxiomSchema:
    return AxiomSchema(
        "A11",
        iff(
            Announce(PHI, Know(AGENT, PSI)),
            implies(PHI, Know(AGENT, Announce(PHI, PSI))),
        ),
    )


@axiom_schemas.register("A12")
def announce_announce() -> AxiomSchema:
    return AxiomSchema(
        "A12",
        iff(Announce(PHI, Announce(PSI, CHI)), Announce(diamond_announce(PHI, PSI), CHI)),
    )


@axiom_schemas.register("A13")
def box_to_announcement() -> AxiomSchema:
    return AxiomSchema("A13", implies(Box(PHI), Announce(PSI, PHI)), epistemic=("psi",))


def get_schema(name: str) -> AxiomSchema:
    return axiom_schemas.get(name)()


def match(pattern: Formula, f: Formula, bindings: Optional[dict] = None) -> Optional[dict]:
    """Unify pattern with f.

    Args:
        pattern (Formula): A schema pattern possibly containing Meta nodes.
        f (Formula): A concrete formula.
        bindings (dict, optional): Bindings made so far.

    Returns:
        Optional[dict]: Extended bindings (metavariable name or
            ("agent", name) to value), or None if f does not match.
    """
    bindings = {} if bindings is None else bindings
    if isinstance(pattern, Meta):
        if pattern.kind == "atom" and not isinstance(f, Atom):
            return None
        if pattern.name in bindings:
            return bindings if bindings[pattern.name] == f else None
        return {**bindings, pattern.name: f}

    if type(pattern) is not type(f):
        return None
    if isinstance(pattern, Atom):
        return bindings if pattern == f else None
    if isinstance(pattern, Know):
        if pattern.agent.startswith("?"):
            key = ("agent", pattern.agent)
            if key in bindings and bindings[key] != f.agent:
                return None
            bindings = {**bindings, key: f.agent}
        elif pattern.agent != f.agent:
            return None

    for sub_pattern, sub_formula in zip(children(pattern), children(f)):
        bindings = match(sub_pattern, sub_formula, bindings)
        if bindings is None:
            return None
    return bindings


def is_instance(f: Formula, name: str) -> bool:
    """Check whether f is an instance of the named axiom (A0 to A13).

    Raises:
        ValueError: If name is not an axiom name.
        TooManyLettersError: If name is A0 and f has too many opaque letters.
    """
    if name not in AXIOM_NAMES:
        raise ValueError(f"Unknown axiom: {name}. Choose one of {AXIOM_NAMES}.")
    if name == "A0":
        return is_tautology_instance(f)
    schema = get_schema(name)
    bindings = match(schema.pattern, f)
    if bindings is None:
        return False
    return all(is_epistemic(bindings[meta]) for meta in schema.epistemic)


def match_axiom(f: Formula) -> Optional[str]:
    """Name of the first schema A1..A13 that f instantiates, else A0 or None."""
    for name in SCHEMA_ORDER:
        if is_instance(f, name):
            return name
    try:
        return "A0" if is_tautology_instance(f) else None
    except TooManyLettersError as e:
        msg.warn(f"Skipped the tautology check: {e}")
        return None


def _substitute(pattern: Formula, values: dict) -> Formula:
    if isinstance(pattern, Meta):
        return values[pattern.name]
    if isinstance(pattern, Know) and pattern.agent.startswith("?"):
        return Know(values[("agent", pattern.agent)], _substitute(pattern.child, values))
    return with_children(pattern, tuple(_substitute(child, values) for child in children(pattern)))


def instantiate_axiom(
    name: str,
    seed: int,
    max_size: int = 5,
    atoms: tuple = DEFAULT_ATOMS,
    agents: tuple = DEFAULT_AGENTS,
) -> Formula:
    """Random instance of schema A1..A13.

    Args:
        name (str): Schema name.
        seed (int): Seed for the random metavariable values.
        max_size (int): Size bound for each metavariable value. Defaults to 5.
        atoms (tuple): Atoms to draw from.
        agents (tuple): Agents to draw from.

    Returns:
        Formula: The instance; A13's announced formula is epistemic.
    """
    schema = get_schema(name)
    rng = np.random.default_rng(seed)
    values: dict = {}
    for _, node in walk(schema.pattern):
        if isinstance(node, Meta) and node.name not in values:
            if node.kind == "atom":
                values[node.name] = Atom(atoms[rng.integers(len(atoms))])
            else:
                fragment = "epistemic" if node.name in schema.epistemic else "apal"
                values[node.name] = gen_formula(
                    seed=int(rng.integers(2**31)),
                    max_size=max_size,
                    fragment=fragment,
                    atoms=atoms,
                    agents=agents,
                )
        if isinstance(node, Know) and node.agent.startswith("?"):
            values.setdefault(("agent", node.agent), agents[rng.integers(len(agents))])
    return _substitute(schema.pattern, values)
