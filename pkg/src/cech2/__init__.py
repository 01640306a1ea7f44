"""First Cech cohomology with coefficients in a finite strict 2-group.

The package computes H^1 of a finite simplicial cover with values in the
2-group of a finite crossed module, by exhaustive enumeration of cocycles
and coboundary witnesses, and cross-checks the algebra against independent
oracles (conjugacy classes, simplicial cohomology, nerve combinatorics).
"""

from . import cohomology, complexes, crossed_modules, exactness, fixtures, groups, nerve

__version__ = "0.1.0"

__all__ = [
    "groups",
    "complexes",
    "crossed_modules",
    "cohomology",
    "exactness",
    "nerve",
    "fixtures",
]
