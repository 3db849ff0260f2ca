"""Truth sets of formulas on finite S5 models.

Announcements restrict the model to the worlds where the announced formula
holds. The box modality quantifies over epistemic announcements; on a
finite model with a finite signature the truth sets of epistemic formulas
that hold at w are exactly the unions of bisimilarity classes containing
w, so box psi holds at w iff psi survives every such restriction.
"""
import threading
from typing import Optional

from apaltools.models.bisimulation import Partition, bisim_quotient, closed_supersets
from apaltools.models.kripke import KripkeModel, restrict
from apaltools.syntax.formula import Announce, Atom, Bottom, Box, Formula, Know, Neg, Or


class TruthSetCache:
    """Memo of truth sets keyed by (model fingerprint, formula).

    Also holds the submodels and bisimulation quotients the truth sets are
    computed on, keyed by fingerprint. Safe for concurrent lookup and insert.
    """

    def __init__(self):
        self._entries: dict = {}
        self._submodels: dict = {}
        self._quotients: dict = {}
        self._lock = threading.Lock()

    @staticmethod
    def key(m: KripkeModel, f: Formula) -> tuple:
        return (m.fingerprint, f)

    def get(self, m: KripkeModel, f: Formula) -> Optional[frozenset]:
        with self._lock:
            return self._entries.get(self.key(m, f))

    def put(self, m: KripkeModel, f: Formula, worlds: frozenset) -> None:
        with self._lock:
            self._entries[self.key(m, f)] = worlds

    def submodel(self, m: KripkeModel, keep: frozenset) -> KripkeModel:
        """restrict(m, keep), built once per (model, kept worlds)."""
        key = (m.fingerprint, frozenset(keep))
        with self._lock:
            hit = self._submodels.get(key)
        if hit is None:
            hit = restrict(m, keep)
            with self._lock:
                self._submodels[key] = hit
        return hit

    def quotient(self, m: KripkeModel) -> Partition:
        with self._lock:
            hit = self._quotients.get(m.fingerprint)
        if hit is None:
            hit = bisim_quotient(m)
            with self._lock:
                self._quotients[m.fingerprint] = hit
        return hit

    def __len__(self) -> int:
        return len(self._entries)


def truth_set(
    m: KripkeModel,
    f: Formula,
    cache: Optional[TruthSetCache] = None,
) -> frozenset:
    """Compute the set of worlds of m where f holds.

    Args:
        m (KripkeModel): The model.
        f (Formula): The formula. Atoms outside the model's signature are
            false everywhere.
        cache (TruthSetCache, optional): Memo shared across calls. Defaults
            to a fresh cache confined to this call.

    Returns:
        frozenset: The truth set of f on m.
    """
    if cache is None:
        cache = TruthSetCache()
    return _truth_set(m, f, cache)


def _truth_set(m: KripkeModel, f: Formula, cache: TruthSetCache) -> frozenset:
    hit = cache.get(m, f)
    if hit is not None:
        return hit
    worlds = _evaluate(m, f, cache)
    cache.put(m, f, worlds)
    return worlds


def _evaluate(m: KripkeModel, f: Formula, cache: TruthSetCache) -> frozenset:
    if isinstance(f, Atom):
        return m.true_at(f.name)
    if isinstance(f, Bottom):
        return frozenset()
    if isinstance(f, Neg):
        return m.world_set - _truth_set(m, f.child, cache)
    if isinstance(f, Or):
        return _truth_set(m, f.left, cache) | _truth_set(m, f.right, cache)
    if isinstance(f, Know):
        inner = _truth_set(m, f.child, cache)
        return frozenset(w for w in m.worlds if m.block_of(f.agent, w) <= inner)
    if isinstance(f, Announce):
        announced = _truth_set(m, f.announced, cache)
        if not announced:
            return m.world_set
        after = _truth_set(cache.submodel(m, announced), f.continuation, cache)
        return (m.world_set - announced) | after
    if isinstance(f, Box):
        return _evaluate_box(m, f.child, cache)
    raise TypeError(f"Not a formula: {f!r}")


def _evaluate_box(m: KripkeModel, inner: Formula, cache: TruthSetCache) -> frozenset:
    part = cache.quotient(m)
    holds = set()
    for w in m.worlds:
        if all(
            w in _truth_set(cache.submodel(m, kept), inner, cache)
            for kept in closed_supersets(part, w)
        ):
            holds.add(w)
    return frozenset(holds)


def satisfies(m: KripkeModel, w: str, f: Formula, cache: Optional[TruthSetCache] = None) -> bool:
    m.check_world(w)
    return w in truth_set(m, f, cache)


def valid_on(m: KripkeModel, f: Formula, cache: Optional[TruthSetCache] = None) -> bool:
    return truth_set(m, f, cache) == m.world_set


def equivalent_on(
    m: KripkeModel,
    f: Formula,
    g: Formula,
    cache: Optional[TruthSetCache] = None,
) -> bool:
    cache = cache if cache is not None else TruthSetCache()
    return truth_set(m, f, cache) == truth_set(m, g, cache)
