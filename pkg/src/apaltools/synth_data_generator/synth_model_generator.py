"""Generators for synthetic S5 models."""
from collections.abc import Iterator
from itertools import product

import numpy as np

from apaltools.models.kripke import KripkeModel
from apaltools.synth_data_generator.utils import canonical_form, random_partition, set_partitions, subsets
from apaltools.utils import DEFAULT_AGENTS, DEFAULT_ATOMS

TRUE_PROB = 0.5


def world_names(n: int) -> list[str]:
    return [f"w{i}" for i in range(n)]


def gen_model(
    seed: int,
    max_worlds: int,
    agents: tuple = DEFAULT_AGENTS,
    atoms: tuple = DEFAULT_ATOMS,
) -> KripkeModel:
    """Generate a pseudo-random S5 model.

    Args:
        seed (int): Seed for the random generator; equal seeds give equal models.
        max_worlds (int): Upper bound on the number of worlds.
        agents (tuple): Agents, each given a random partition of the worlds.
        atoms (tuple): Atoms, each true at a random subset of the worlds.

    Raises:
        ValueError: If max_worlds is below 1.

    Returns:
        KripkeModel: A model with between 1 and max_worlds worlds.
    """
    if max_worlds < 1:
        raise ValueError("max_worlds must be at least 1.")

    rng = np.random.default_rng(seed)
    worlds = world_names(int(rng.integers(1, max_worlds + 1)))
    relations = {agent: random_partition(rng, worlds) for agent in agents}
    valuation = {
        atom: [w for w, draw in zip(worlds, rng.random(len(worlds))) if draw < TRUE_PROB]
        for atom in atoms
    }
    return KripkeModel(worlds=worlds, agents=agents, relations=relations, valuation=valuation)


def enumerate_models(
    max_worlds: int,
    agents: tuple = DEFAULT_AGENTS,
    atoms: tuple = DEFAULT_ATOMS,
    up_to_isomorphism: bool = False,
) -> Iterator[KripkeModel]:
    """Yield every model on w0..w(n-1) for n up to max_worlds.

    Partitions are enumerated once each in canonical (restricted growth)
    form, so no two yielded models with the same worlds are equal.

    Args:
        max_worlds (int): Largest domain size.
        agents (tuple): Agents, each given every partition of the worlds.
        atoms (tuple): Atoms, each given every subset of the worlds.
        up_to_isomorphism (bool): Yield only the first model of each class
            under renaming of worlds. Defaults to False.
    """
    for n in range(1, max_worlds + 1):
        worlds = world_names(n)
        partitions = list(set_partitions(worlds))
        valuations = list(subsets(worlds))
        seen: set = set()
        for relation_choice in product(partitions, repeat=len(agents)):
            for valuation_choice in product(valuations, repeat=len(atoms)):
                if up_to_isomorphism:
                    form = canonical_form(worlds, relation_choice, valuation_choice)
                    if form in seen:
                        continue
                    seen.add(form)
                yield KripkeModel(
                    worlds=worlds,
                    agents=agents,
                    relations=dict(zip(agents, relation_choice)),
                    valuation=dict(zip(atoms, valuation_choice)),
                )
