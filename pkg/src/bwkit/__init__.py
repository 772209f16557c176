"""Exact verification engine for Bargmann-Wigner multispinor expansions and
the (1/2,1/2) vector-field wave operators."""

__version__ = "0.1.0"
