"""Exact kernel for ordinals, sign-sequence surreals and logarithmic hyperseries."""

__version__ = "0.1.0"
