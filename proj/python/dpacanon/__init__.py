"""Canonical forms and natural colors for deterministic parity automata.

Lasso words can be given as ``LassoWord`` objects or as ``"u:v"`` text
over the automaton's alphabet.
"""

from ._dpacanon import *  # noqa: F401,F403
from ._dpacanon import __doc__  # noqa: F401

__version__ = "0.1.0"
