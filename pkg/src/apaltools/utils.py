"""Utilities for apaltools."""
from pathlib import Path

import catalogue

PROJECT_ROOT = Path(__file__).parent.parent.parent

# Registries, filled by the @<registry>.register("name") decorators in the
# axioms and loaders subpackages.
axiom_schemas = catalogue.create("apaltools", "axiom_schemas")
corpus_loaders = catalogue.create("apaltools", "corpus_loaders")

DEFAULT_SEED = 0
DEFAULT_CASES = 1000
DEFAULT_MAX_WORLDS = 6
DEFAULT_AGENTS = ("a", "b")
DEFAULT_ATOMS = ("p", "q", "r")

MAX_TAUTOLOGY_LETTERS = 20
BOX_ORACLE_MAX_WORLDS = 12
