"""Exact-arithmetic toolkit for paperfolding words, Catalan numbers mod 2,
Hankel factorizations and continued fractions over formal series."""

__version__ = "0.1.0"

from . import binom2, catalanz, cfseries, gf2sign, seq  # noqa: F401
