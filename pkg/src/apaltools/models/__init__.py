"""Finite S5 Kripke models and bisimulation."""
