"""Positive parameterization, its inverse and the torus action"""

from src.posparam.parameterization import (
    K_index,
    PlueckerVector,
    RegionAssignment,
    phi1,
    phi2,
    plucker_relations_hold,
    psi,
    torus_rescale,
    torus_to_representative,
)
from src.posparam.tsv import (
    format_plucker_tsv,
    format_regions_tsv,
    parse_plucker_tsv,
    region_values,
)

__all__ = [
    "K_index",
    "PlueckerVector",
    "RegionAssignment",
    "format_plucker_tsv",
    "format_regions_tsv",
    "parse_plucker_tsv",
    "phi1",
    "phi2",
    "plucker_relations_hold",
    "psi",
    "region_values",
    "torus_rescale",
    "torus_to_representative",
]
