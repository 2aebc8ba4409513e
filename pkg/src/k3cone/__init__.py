"""Exact cone geometry for rank-4 hyperbolic lattices.

The package computes, over the integers and rationals only, the geometry
attached to a lattice of signature (1, 3) with a distinguished finite set of
square minus-two generators: dual cone pairs, Hilbert bases, fibration
structures, cohomology of divisor classes, projective model classification,
and a generation pipeline for distinguished degrees.
"""

from .lattice import NSLattice, catalog, gram_from_blocks, solve_slice

__version__ = "0.1.0"

__all__ = [
    "NSLattice",
    "catalog",
    "gram_from_blocks",
    "solve_slice",
    "__version__",
]
