"""Brute-force reference for the box clause.

Enumerates every subset of worlds instead of working block by block, and
is therefore only meant for small models.
"""
from typing import Optional

from wasabi import msg

from apaltools.checker.truth_sets import TruthSetCache, satisfies
from apaltools.models.kripke import KripkeModel
from apaltools.syntax.formula import Formula
from apaltools.utils import BOX_ORACLE_MAX_WORLDS


def box_oracle(m: KripkeModel, w: str, inner: Formula, cache: Optional[TruthSetCache] = None) -> bool:
    """Decide box inner at w by enumerating all bisimulation-closed subsets.

    Args:
        m (KripkeModel): The model; intended for at most a dozen worlds.
        w (str): The evaluation world.
        inner (Formula): The formula under the box.
        cache (TruthSetCache, optional): Memo to share with other truth set
            computations on m. Defaults to a fresh one.

    Raises:
        UnknownWorldError: If w is not a world of m.

    Returns:
        bool: Whether inner holds at w after every announcement whose truth
            set is a bisimulation-closed set containing w.
    """
    m.check_world(w)
    if len(m.worlds) > BOX_ORACLE_MAX_WORLDS:
        msg.warn(
            f"box_oracle enumerates 2^{len(m.worlds) - 1} subsets; "
            f"intended for at most {BOX_ORACLE_MAX_WORLDS} worlds.",
        )

    if cache is None:
        cache = TruthSetCache()
    blocks = cache.quotient(m).blocks
    others = [v for v in m.worlds if v != w]
    for mask in range(2 ** len(others)):
        kept = frozenset([w] + [v for j, v in enumerate(others) if mask >> j & 1])
        if any(block & kept and not block <= kept for block in blocks):
            continue
        if not satisfies(cache.submodel(m, kept), w, inner, cache):
            return False
    return True
