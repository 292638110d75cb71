"""Exact and numerical verification of polylogarithmic functional equations
through associators, Lie series and l-adic character identities."""

__version__ = "0.1.0"
