"""Exact toolkit for Frobenius algebras given by structure constants."""

__version__ = "0.1.0"
