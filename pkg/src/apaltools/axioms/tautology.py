"""Propositional tautology checking over opaque letters."""
import numpy as np

from apaltools.errors import TooManyLettersError
from apaltools.syntax.formula import Bottom, Formula, Neg, Or
from apaltools.syntax.printer import render
from apaltools.utils import MAX_TAUTOLOGY_LETTERS


def opaque_letters(f: Formula) -> list:
    """Maximal non-Boolean subformulas of f, in order of first appearance.

    Atoms, K a _, [_] _ and box _ count as letters; false is a constant.
    """
    if isinstance(f, Bottom):
        return []
    if isinstance(f, Neg):
        return opaque_letters(f.child)
    if isinstance(f, Or):
        letters = opaque_letters(f.left)
        letters.extend(g for g in opaque_letters(f.right) if g not in letters)
        return letters
    return [f]


def _evaluate(f: Formula, columns: dict, n_rows: int) -> np.ndarray:
    if isinstance(f, Bottom):
        return np.zeros(n_rows, dtype=bool)
    if isinstance(f, Neg):
        return ~_evaluate(f.child, columns, n_rows)
    if isinstance(f, Or):
        return _evaluate(f.left, columns, n_rows) | _evaluate(f.right, columns, n_rows)
    return columns[f]


def is_tautology_instance(f: Formula, max_letters: int = MAX_TAUTOLOGY_LETTERS) -> bool:
    """Check whether f instantiates a propositional tautology.

    Args:
        f (Formula): The formula.
        max_letters (int): Refuse truth tables with more opaque letters than
            this. Defaults to 20.

    Raises:
        TooManyLettersError: If f has more than max_letters opaque letters.

    Returns:
        bool: True iff f is true under all 2^n assignments to its letters.
    """
    letters = opaque_letters(f)
    if len(letters) > max_letters:
        raise TooManyLettersError(
            f"{len(letters)} opaque letters in {render(f)}; the limit is {max_letters}",
        )
    rows = np.arange(2 ** len(letters), dtype=np.int64)
    columns = {letter: (rows >> i) & 1 == 1 for i, letter in enumerate(letters)}
    return bool(np.all(_evaluate(f, columns, len(rows))))
