"""Exact (b,c)-inverses over rings: engine, verifier, CLI and HTTP surface."""

__version__ = "1.0.0"
