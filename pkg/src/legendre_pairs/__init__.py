"""Legendre G-array pairs, perfect arrays and their Hadamard matrices."""

__version__ = "0.1.0"
