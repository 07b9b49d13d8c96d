"""Exact calculus of local Langlands parameters.

Subpackages cover the coefficient field, based root data and their
invariants, the C-group realization, matrix-level parameters in
Weil-Deligne / l-adic / SL2 formats, the functorial representation
calculus, and the twist identity checkers.  Everything is exact: no
floating point anywhere.
"""

from ._backend import BACKEND

__all__ = ["BACKEND"]
__version__ = "0.1.0"
