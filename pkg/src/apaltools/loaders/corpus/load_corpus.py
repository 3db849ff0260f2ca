"""Loaders for the shipped models and derivations."""
from pathlib import Path

import srsly

from apaltools.axioms.derivation import Derivation, load_derivation
from apaltools.loaders.model_loader import load_model_file
from apaltools.models.kripke import KripkeModel
from apaltools.utils import PROJECT_ROOT, corpus_loaders

CORPUS_DIR = PROJECT_ROOT / "tests" / "test_data"


def load_derivation_dir(directory: Path) -> dict[str, Derivation]:
    """Load every .prf file in directory, keyed by file stem."""
    return {path.stem: load_derivation(path) for path in sorted(directory.glob("*.prf"))}


@corpus_loaders.register("model_m1")
def load_model_m1() -> KripkeModel:
    """Two worlds w and v, one agent a unable to tell them apart, p true at w."""
    return load_model_file(CORPUS_DIR / "models" / "m1.json")


@corpus_loaders.register("model_m2")
def load_model_m2() -> KripkeModel:
    """Worlds w1, w2 and v in a single a-block, p true at w1 and w2."""
    return load_model_file(CORPUS_DIR / "models" / "m2.json")


@corpus_loaders.register("accepted_derivations")
def load_accepted_derivations() -> dict[str, Derivation]:
    return load_derivation_dir(CORPUS_DIR / "derivations")


@corpus_loaders.register("rejected_derivations")
def load_rejected_derivations() -> dict[str, tuple[Derivation, int]]:
    """Mutated derivations, each with the step at which it must be rejected."""
    directory = CORPUS_DIR / "derivations" / "rejected"
    expected = srsly.read_json(directory / "expected.json")
    return {
        name: (derivation, expected[name])
        for name, derivation in load_derivation_dir(directory).items()
    }
