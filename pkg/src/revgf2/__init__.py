"""Reversible circuits for GF(2^m) inversion and elliptic-curve addition,
with classical oracles, a basis-state simulator, and resource accounting."""

__version__ = "0.1.0"
