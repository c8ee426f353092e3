"""Exact computations with line arrangements, their dual graphs, ideals and nerve complexes."""

__version__ = "0.1.0"
