"""Springer representations of classical Weyl groups from Green polynomials."""

__version__ = "0.1.0"
