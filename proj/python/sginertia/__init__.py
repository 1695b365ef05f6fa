"""Exact signed-graph spectral toolkit.

Exposes exact adjacency-matrix inertia (positive/negative index and
nullity), girth and balance analysis, constructors and classifiers for the
families attaining the girth bounds, and exhaustive small-order
verification sweeps. Everything is computed in exact rational arithmetic.
"""

from sginertia._core import *  # noqa: F401,F403
from sginertia._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
