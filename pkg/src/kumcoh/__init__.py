"""Integral cohomology of Hilbert schemes of an abelian surface and of the generalized Kummer fourfold."""

__version__ = "0.1.0"
