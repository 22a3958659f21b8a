"""Exact computations with metric Lie superalgebras, their cohomology and deformations."""

__version__ = "0.1.0"
