"""Exact lattice, diagram and fixed-locus checks for involutions of Enriques surfaces."""

__version__ = "0.1.0"
