"""Web diagrams, lattice paths and Plücker polynomials"""

from src.webdiagram.diagram import Region, WebDiagram, build_web
from src.webdiagram.paths import LatticePath, PathFamily, path_families, paths_between
from src.webdiagram.plucker import (
    k_subsets,
    lgv_check,
    matrix_entry_poly,
    outer_exponents_constant,
    plucker_poly,
)
from src.webdiagram.polynomial import ExponentPolynomial

__all__ = [
    "ExponentPolynomial",
    "LatticePath",
    "PathFamily",
    "Region",
    "WebDiagram",
    "build_web",
    "k_subsets",
    "lgv_check",
    "matrix_entry_poly",
    "outer_exponents_constant",
    "path_families",
    "paths_between",
    "plucker_poly",
]
