"""Exact computation of braided products of Hopf-module algebras and their PBW deformations."""

__version__ = "0.1.0"
