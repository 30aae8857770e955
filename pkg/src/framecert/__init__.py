"""Exact GF(2) verification of the frame-code combinatorics behind the shorter Moonshine module."""

__version__ = "0.1.0"
