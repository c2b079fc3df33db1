"""Spectra, compact localized states and exact dynamics of non-Hermitian
Aharonov-Bohm cages (generalized cross-stitch lattice / Creutz ladder)."""

from ._abcage import *  # noqa: F401,F403
from ._abcage import __doc__  # noqa: F401

__version__ = "0.1.0"
