"""Smash products on permutations, non-commutative symmetric functions,
symmetric functions and quasi-symmetric functions."""

from smashprod.kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
