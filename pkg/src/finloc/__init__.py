"""Finite point-free topology."""

__version__ = "0.1.0"
