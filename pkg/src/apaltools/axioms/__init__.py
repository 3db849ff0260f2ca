"""Axiom schemas, tautologies and derivation checking."""
