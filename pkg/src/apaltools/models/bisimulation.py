"""Bisimulation quotients by partition refinement.

Refinement starts from the partition induced by the atoms of the model's
signature and splits blocks until, for every agent, all worlds of a block
see the same set of blocks. The resulting blocks are the bisimilarity
classes; their unions are exactly the truth sets of epistemic formulas,
which is what the box modality quantifies over.
"""
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator

from apaltools.errors import UnknownWorldError
from apaltools.models.kripke import KripkeModel
from apaltools.syntax.formula import Atom, Bottom, Formula, Know, Neg, Or, conj, possible, top


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks covering the worlds of a model.

    Args:
        blocks (tuple[frozenset, ...]): Blocks ordered by their first world
            in document order.
        class_of (dict[str, int]): Index of the block containing each world.
    """

    blocks: tuple
    class_of: dict

    def __hash__(self):
        return hash(self.blocks)

    def block_of(self, w: str) -> frozenset:
        if w not in self.class_of:
            raise UnknownWorldError(w)
        return self.blocks[self.class_of[w]]

    @property
    def is_discrete(self) -> bool:
        return all(len(block) == 1 for block in self.blocks)


def _number_by_first_appearance(m: KripkeModel, keys: dict) -> dict:
    """Replace arbitrary hashable block keys by 0, 1, ... in document order."""
    numbering: dict = {}
    labels = {}
    for w in m.worlds:
        labels[w] = numbering.setdefault(keys[w], len(numbering))
    return labels


def _atom_labels(m: KripkeModel) -> dict:
    keys = {w: tuple(w in m.true_at(p) for p in m.signature) for w in m.worlds}
    return _number_by_first_appearance(m, keys)


def _successor_classes(m: KripkeModel, labels: dict, agent: str, w: str) -> frozenset:
    return frozenset(labels[v] for v in m.block_of(agent, w))


def _refine(m: KripkeModel, labels: dict) -> dict:
    keys = {
        w: (labels[w],) + tuple(_successor_classes(m, labels, a, w) for a in m.agents)
        for w in m.worlds
    }
    return _number_by_first_appearance(m, keys)


def refinement_rounds(m: KripkeModel) -> list:
    """Labelings of the worlds after each refinement round, up to the fixed point."""
    rounds = [_atom_labels(m)]
    while True:
        refined = _refine(m, rounds[-1])
        if len(set(refined.values())) == len(set(rounds[-1].values())):
            return rounds
        rounds.append(refined)


def _partition_from_labels(m: KripkeModel, labels: dict) -> Partition:
    n_blocks = len(set(labels.values()))
    members: list = [[] for _ in range(n_blocks)]
    for w in m.worlds:
        members[labels[w]].append(w)
    return Partition(blocks=tuple(frozenset(b) for b in members), class_of=dict(labels))


def bisim_quotient(m: KripkeModel) -> Partition:
    """Coarsest partition of m's worlds into bisimilarity classes.

    Args:
        m (KripkeModel): The model.

    Returns:
        Partition: Blocks agree on every atom of the signature and are
            stable under every agent's relation.
    """
    return _partition_from_labels(m, refinement_rounds(m)[-1])


def closed_supersets(part: Partition, w: str) -> Iterator[frozenset]:
    """Unions of blocks containing w's block, in a fixed order.

    Args:
        part (Partition): A bisimulation quotient.
        w (str): The evaluation world.

    Raises:
        UnknownWorldError: If w is not in the partitioned model.

    Yields:
        frozenset: Each of the 2^(k-1) unions, starting with w's own block.
    """
    own = part.block_of(w)
    others = [block for block in part.blocks if block != own]
    for mask in range(2 ** len(others)):
        yield own.union(*(block for j, block in enumerate(others) if mask >> j & 1))


def quotient_model(m: KripkeModel, part: Partition) -> KripkeModel:
    """The model whose worlds are the blocks of part.

    Block names join the block's worlds with "+" in document order.
    """
    names = ["+".join(m.sorted_worlds(block)) for block in part.blocks]
    representative = [m.sorted_worlds(block)[0] for block in part.blocks]

    relations = {}
    for agent in m.agents:
        groups: list = []
        placed: set = set()
        for i, w in enumerate(representative):
            if i in placed:
                continue
            group = sorted({part.class_of[v] for v in m.block_of(agent, w)})
            placed.update(group)
            groups.append([names[j] for j in group])
        relations[agent] = groups

    valuation = {
        p: [names[i] for i, w in enumerate(representative) if w in m.true_at(p)]
        for p in m.signature
    }
    return KripkeModel(worlds=names, agents=m.agents, relations=relations, valuation=valuation)


def _conjoin(formulas: Iterable[Formula]) -> Formula:
    formulas = list(formulas)
    if not formulas:
        return top()
    return reduce(conj, formulas)


def _disjoin(formulas: Iterable[Formula]) -> Formula:
    formulas = list(formulas)
    if not formulas:
        return Bottom()
    return reduce(Or, formulas)


def _class_formulas(m: KripkeModel) -> dict:
    """Epistemic formula for each final bisimilarity class, keyed by label."""
    rounds = refinement_rounds(m)

    first = rounds[0]
    formulas = {}
    for w in m.worlds:
        if first[w] not in formulas:
            formulas[first[w]] = _conjoin(
                Atom(p) if w in m.true_at(p) else Neg(Atom(p)) for p in m.signature
            )

    for previous, current in zip(rounds, rounds[1:]):
        refined = {}
        for w in m.worlds:
            if current[w] in refined:
                continue
            parts = [formulas[previous[w]]]
            for agent in m.agents:
                seen = sorted(_successor_classes(m, previous, agent, w))
                parts.extend(possible(agent, formulas[c]) for c in seen)
                parts.append(Know(agent, _disjoin(formulas[c] for c in seen)))
            refined[current[w]] = _conjoin(parts)
        formulas = refined
    return formulas


def characteristic_formula(m: KripkeModel, worlds: Iterable[str]) -> Formula:
    """Epistemic formula true exactly on the bisimulation closure of worlds.

    Args:
        m (KripkeModel): The model.
        worlds (Iterable[str]): Worlds whose classes the formula describes.

    Returns:
        Formula: An epistemic formula whose truth set on m is the union of
            the bisimilarity classes meeting worlds.
    """
    labels = refinement_rounds(m)[-1]
    formulas = _class_formulas(m)
    wanted = []
    for w in m.sorted_worlds(worlds):
        if labels[w] not in wanted:
            wanted.append(labels[w])
    return _disjoin(formulas[c] for c in wanted)
