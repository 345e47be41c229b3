"""Treewidth tools for Kneser, Johnson and Johnson-complement graphs.

Vertices are 0-based indices; subsets are lists of elements of {1..n}.
"""

from ._core import *  # noqa: F401,F403
from ._core import ParseError, ResourceError  # noqa: F401

__version__ = "0.1.0"
