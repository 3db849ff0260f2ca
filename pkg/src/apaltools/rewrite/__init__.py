"""Reduction of announcement formulas to epistemic form."""
