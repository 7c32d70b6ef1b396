"""Hilbert series of generic ideals in exterior and square-free algebras."""

__version__ = "1.0.0"
