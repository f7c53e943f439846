"""Poly-(virtually free) certificates for orbifold braid groups and affine Artin groups."""

__version__ = "0.1.0"
