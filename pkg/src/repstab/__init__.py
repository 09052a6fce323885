"""Exact stable-range formulas for FI-modules, with brute-force oracles."""

__version__ = "0.1.0"
