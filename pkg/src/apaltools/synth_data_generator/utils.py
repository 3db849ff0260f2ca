"""Utilites for generating synthetic models."""
from collections.abc import Iterator, Sequence
from itertools import permutations

import numpy as np


def random_partition(rng: np.random.Generator, items: Sequence[str]) -> list[list[str]]:
    """Split items into blocks by drawing a block label per item.

    Args:
        rng (np.random.Generator): The random generator.
        items (Sequence[str]): The items to partition.

    Returns:
        list[list[str]]: Nonempty blocks, ordered by first member.
    """
    labels = rng.integers(0, len(items), size=len(items))
    blocks: dict = {}
    for item, label in zip(items, labels):
        blocks.setdefault(int(label), []).append(item)
    return list(blocks.values())


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """All labellings of n items where each label is at most one above every earlier one.

    These are in bijection with the set partitions of n items (Bell(n) of them).
    """
    if n == 0:
        yield ()
        return

    def extend(prefix: tuple, highest: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield prefix
            return
        for label in range(highest + 2):
            yield from extend(prefix + (label,), max(highest, label))

    yield from extend((0,), 0)


def set_partitions(items: Sequence[str]) -> Iterator[list[list[str]]]:
    for labels in restricted_growth_strings(len(items)):
        blocks: dict = {}
        for item, label in zip(items, labels):
            blocks.setdefault(label, []).append(item)
        yield list(blocks.values())


def subsets(items: Sequence[str]) -> Iterator[list[str]]:
    for mask in range(2 ** len(items)):
        yield [item for i, item in enumerate(items) if mask >> i & 1]


def canonical_form(
    items: Sequence[str],
    partitions: Sequence[Sequence[Sequence[str]]],
    valuation: Sequence[Sequence[str]],
) -> tuple:
    """Smallest relabelling of a model over all permutations of its items.

    Two models on the same items get equal canonical forms iff some
    permutation of the items maps one onto the other.

    Args:
        items (Sequence[str]): The worlds.
        partitions (Sequence): One partition of items per agent, agents in a fixed order.
        valuation (Sequence): One subset of items per atom, atoms in a fixed order.

    Returns:
        tuple: A hashable representative of the isomorphism class.
    """
    forms = []
    for order in permutations(range(len(items))):
        rename = dict(zip(items, order))
        relabelled_partitions = tuple(
            tuple(sorted(tuple(sorted(rename[w] for w in block)) for block in partition))
            for partition in partitions
        )
        relabelled_valuation = tuple(tuple(sorted(rename[w] for w in ws)) for ws in valuation)
        forms.append((relabelled_partitions, relabelled_valuation))
    return min(forms)
