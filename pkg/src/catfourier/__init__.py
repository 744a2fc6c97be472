"""Exact verification of Fourier-type transforms for finite promonoidal categories."""

__version__ = "0.1.0"
