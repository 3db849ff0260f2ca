"""Synthetic formula and model generators."""
