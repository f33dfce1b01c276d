"""Cohomology and point counts of strata of symmetric powers of the projective line."""

__version__ = "0.1.0"
