"""Finite S5 Kripke models.

Each agent's equivalence relation is stored as a partition of the worlds,
so reflexivity, symmetry and transitivity hold by construction.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

import srsly

from apaltools.errors import EmptyRestrictionError, ModelValidationError, UnknownWorldError


@dataclass(frozen=True)
class KripkeModel:
    """A model (W, R, V) with a finite atom signature.

    Args:
        worlds (tuple[str, ...]): World identifiers in document order.
        agents (tuple[str, ...]): Agent identifiers.
        relations (Mapping[str, tuple[frozenset, ...]]): For each agent the
            blocks of its equivalence relation.
        valuation (Mapping[str, frozenset]): For each atom of the signature
            the worlds where it is true. Atoms outside the signature are
            false everywhere.
    """

    worlds: tuple
    agents: tuple
    relations: Mapping
    valuation: Mapping
    _block_index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "worlds", tuple(self.worlds))
        object.__setattr__(self, "agents", tuple(self.agents))
        object.__setattr__(
            self,
            "relations",
            {a: tuple(frozenset(b) for b in blocks) for a, blocks in self.relations.items()},
        )
        object.__setattr__(
            self,
            "valuation",
            {p: frozenset(ws) for p, ws in self.valuation.items()},
        )
        self._validate()

        index = {}
        for agent, blocks in self.relations.items():
            for block in blocks:
                for w in block:
                    index[(agent, w)] = block
        object.__setattr__(self, "_block_index", index)

    def _validate(self):
        if not self.worlds:
            raise ModelValidationError("nonempty domain required")
        world_set = frozenset(self.worlds)
        if len(world_set) != len(self.worlds):
            raise ModelValidationError("world identifiers must be unique")
        if any(not isinstance(w, str) or not w for w in self.worlds):
            raise ModelValidationError("world identifiers must be nonempty strings")

        for agent in self.agents:
            if agent not in self.relations:
                raise ModelValidationError(f"no relation given for agent {agent!r}")
        for agent, blocks in self.relations.items():
            if agent not in self.agents:
                raise ModelValidationError(f"relation given for undeclared agent {agent!r}")
            seen: set = set()
            for block in blocks:
                if not block:
                    raise ModelValidationError(f"empty block for agent {agent!r}")
                unknown = block - world_set
                if unknown:
                    raise ModelValidationError(
                        f"block for agent {agent!r} mentions unknown world {sorted(unknown)[0]!r}",
                    )
                if seen & block:
                    raise ModelValidationError(f"blocks not disjoint for agent {agent!r}")
                seen |= block
            if seen != world_set:
                missing = [w for w in self.worlds if w not in seen]
                raise ModelValidationError(
                    f"blocks for agent {agent!r} do not cover world {missing[0]!r}",
                )

        for atom, true_worlds in self.valuation.items():
            unknown = true_worlds - world_set
            if unknown:
                raise ModelValidationError(
                    f"valuation of {atom!r} mentions unknown world {sorted(unknown)[0]!r}",
                )

    def __hash__(self):
        return hash(self.fingerprint)

    @cached_property
    def fingerprint(self) -> str:
        """Canonical serialisation, independent of world and block order."""
        return srsly.json_dumps(
            {
                "worlds": sorted(self.worlds),
                "relations": {
                    a: sorted(sorted(block) for block in blocks)
                    for a, blocks in self.relations.items()
                },
                "valuation": {p: sorted(ws) for p, ws in self.valuation.items()},
            },
            sort_keys=True,
        )

    @cached_property
    def world_set(self) -> frozenset:
        return frozenset(self.worlds)

    @property
    def signature(self) -> tuple:
        return tuple(self.valuation)

    def check_world(self, w: str) -> None:
        if w not in self.world_set:
            raise UnknownWorldError(w)

    def true_at(self, atom: str) -> frozenset:
        return self.valuation.get(atom, frozenset())

    def block_of(self, agent: str, w: str) -> frozenset:
        """The worlds agent cannot distinguish from w.

        An agent without a declared relation is treated as knowing
        nothing beyond the actual world (the identity relation).
        """
        return self._block_index.get((agent, w), frozenset((w,)))

    def sorted_worlds(self, ws: Iterable[str]) -> list:
        """ws in document order."""
        members = frozenset(ws)
        return [w for w in self.worlds if w in members]


def restrict(m: KripkeModel, keep: Iterable[str]) -> KripkeModel:
    """Restrict m to the worlds in keep.

    Args:
        m (KripkeModel): The model.
        keep (Iterable[str]): Nonempty subset of m's worlds.

    Raises:
        EmptyRestrictionError: If keep is empty.
        UnknownWorldError: If keep mentions a world not in m.

    Returns:
        KripkeModel: The submodel; blocks and valuation intersected with keep.
    """
    keep = frozenset(keep)
    if not keep:
        raise EmptyRestrictionError("cannot restrict a model to an empty set of worlds")
    for w in keep:
        m.check_world(w)
    if keep == m.world_set:
        return m

    return KripkeModel(
        worlds=tuple(w for w in m.worlds if w in keep),
        agents=m.agents,
        relations={
            a: tuple(block & keep for block in blocks if block & keep)
            for a, blocks in m.relations.items()
        },
        valuation={p: ws & keep for p, ws in m.valuation.items()},
    )
