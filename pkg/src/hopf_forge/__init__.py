"""Exact computer algebra for finite-dimensional braided Hopf algebras."""

__version__ = "0.1.0"
