"""Exact-arithmetic toolkit for (6,10) complete intersections in P(1,2,2,3,5)."""

__version__ = "0.1.0"
