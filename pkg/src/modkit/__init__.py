"""Exact toolkit for modular data: validation, structure, and factorization checks."""

__version__ = "0.1.0"
