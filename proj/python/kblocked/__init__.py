"""Exact k-blocked point sets: verification, constructions and grid search.

Coordinates cross the boundary as fractions.Fraction; plain ints and "p/q" strings
are accepted on input.
"""

from ._kblocked import *  # noqa: F401,F403
from ._kblocked import __doc__ as _native_doc  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
