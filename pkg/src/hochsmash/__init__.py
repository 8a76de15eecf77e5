"""Graded Hochschild homology and cohomology of S(V)#G for finite matrix groups."""

from .catalog import catalog, catalog_group
from .closedform import (
    cohomology_series_direct,
    cohomology_series_via_duality,
    duality_check,
    homology_series,
    invariant_molien,
    twisted_homology_series,
)
from .groupfile import parse_group_file
from .groups import close_group, double
from .linalg import Matrix

__version__ = "0.1.0"

__all__ = [
    "Matrix",
    "catalog",
    "catalog_group",
    "close_group",
    "cohomology_series_direct",
    "cohomology_series_via_duality",
    "double",
    "duality_check",
    "homology_series",
    "invariant_molien",
    "parse_group_file",
    "twisted_homology_series",
]
