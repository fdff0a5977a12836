"""Spectral sequence bookkeeping and verification for C2-equivariant stable stems."""

__version__ = "0.1.0"
