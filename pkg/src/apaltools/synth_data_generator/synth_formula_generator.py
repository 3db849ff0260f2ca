"""Generator for synthetic formulas."""
import numpy as np

from apaltools.syntax.formula import Announce, Atom, Bottom, Box, Formula, Know, Neg, Or
from apaltools.syntax.measures import size
from apaltools.utils import DEFAULT_AGENTS, DEFAULT_ATOMS

FRAGMENTS = ("epistemic", "pal", "apal")
BOTTOM_PROB = 0.1


def _grow(
    rng: np.random.Generator,
    budget: int,
    fragment: str,
    atoms: tuple,
    agents: tuple,
) -> Formula:
    """Random formula of the fragment with size at most budget."""
    options = ["leaf"]
    if budget >= 2:
        options += ["neg", "know"]
        if fragment == "apal":
            options.append("box")
    if budget >= 3:
        options.append("or")
    # [phi] psi has size at least 4
    if budget >= 4 and fragment != "epistemic":
        options.append("announce")

    kind = options[rng.integers(len(options))]

    if kind == "leaf":
        if rng.random() < BOTTOM_PROB:
            return Bottom()
        return Atom(atoms[rng.integers(len(atoms))])
    if kind == "neg":
        return Neg(_grow(rng, budget - 1, fragment, atoms, agents))
    if kind == "box":
        return Box(_grow(rng, budget - 1, fragment, atoms, agents))
    if kind == "know":
        agent = agents[rng.integers(len(agents))]
        return Know(agent, _grow(rng, budget - 1, fragment, atoms, agents))
    if kind == "or":
        left = _grow(rng, int(rng.integers(1, budget - 1)), fragment, atoms, agents)
        right = _grow(rng, budget - 1 - size(left), fragment, atoms, agents)
        return Or(left, right)

    # size([phi] psi) = size(phi) + 3 * size(psi)
    continuation = _grow(rng, int(rng.integers(1, (budget - 1) // 3 + 1)), fragment, atoms, agents)
    announced = _grow(rng, budget - 3 * size(continuation), fragment, atoms, agents)
    return Announce(announced, continuation)


def gen_formula(
    seed: int,
    max_size: int,
    fragment: str = "apal",
    atoms: tuple = DEFAULT_ATOMS,
    agents: tuple = DEFAULT_AGENTS,
) -> Formula:
    """Generate a pseudo-random formula.

    Args:
        seed (int): Seed for the random generator; equal seeds give equal formulas.
        max_size (int): Upper bound on size() of the result.
        fragment (str): "epistemic" (no announcements, no box), "pal" (no box)
            or "apal". Defaults to "apal".
        atoms (tuple): Atom names to draw from.
        agents (tuple): Agent names to draw from.

    Raises:
        ValueError: If fragment is unknown or max_size is below 1.

    Returns:
        Formula: A formula of the fragment with size at most max_size.
    """
    if fragment not in FRAGMENTS:
        raise ValueError(f"Unknown fragment: {fragment}. Choose one of {FRAGMENTS}.")
    if max_size < 1:
        raise ValueError("max_size must be at least 1.")

    rng = np.random.default_rng(seed)
    return _grow(rng, max_size, fragment, tuple(atoms), tuple(agents))
