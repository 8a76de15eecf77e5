"""Brute-force ground truth from explicit complexes."""

from .bar import bar_dims
from .graded import GradedDims
from .koszul import (
    COHOMOLOGY,
    HOMOLOGY,
    HomologySlot,
    TwistedKoszulComplex,
    build_twisted_complex,
    class_decomposition_dims,
    koszul_invariant_dims,
    monomials,
)

__all__ = [
    "COHOMOLOGY",
    "GradedDims",
    "HOMOLOGY",
    "HomologySlot",
    "TwistedKoszulComplex",
    "bar_dims",
    "build_twisted_complex",
    "class_decomposition_dims",
    "koszul_invariant_dims",
    "monomials",
]
