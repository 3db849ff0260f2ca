"""Formulas: syntax tree, grammar, printer and measures."""
