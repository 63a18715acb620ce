"""Finite lattices with quasi-complementation, their canonical frames and dualities."""

__version__ = "0.1.0"
