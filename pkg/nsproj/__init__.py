"""Exact projective geometry over a computable non-Archimedean field."""

__version__ = "1.0.0"
