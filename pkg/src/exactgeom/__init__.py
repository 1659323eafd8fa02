"""Exact rational polyhedral kernel"""

from src.exactgeom.cone import Cone
from src.exactgeom.fan import Fan, euler_characteristic_ok
from src.exactgeom.polytope import (
    Polytope,
    convex_hull,
    inner_normal_fan,
    minkowski_sum,
    minkowski_sum_all,
)
from src.exactgeom.refinement import common_refinement, refine_all
from src.exactgeom.symmetry import SignedPermutation, find_signed_permutation
from src.exactgeom.vectors import RatVector, primitive, rat_vector

__all__ = [
    "Cone",
    "Fan",
    "Polytope",
    "RatVector",
    "SignedPermutation",
    "common_refinement",
    "convex_hull",
    "euler_characteristic_ok",
    "find_signed_permutation",
    "inner_normal_fan",
    "minkowski_sum",
    "minkowski_sum_all",
    "primitive",
    "rat_vector",
    "refine_all",
]
