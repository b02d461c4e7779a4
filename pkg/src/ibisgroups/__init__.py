"""Irredundant bases, IBIS decisions and matroids of permutation groups."""

__version__ = "0.1.0"
