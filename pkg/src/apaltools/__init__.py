"""Toolkit for arbitrary public announcement logic."""

__version__ = "0.1.0"
