"""Plane binary trees, the Stanley-Pitman fan and F_{2,n}"""

from src.assoctrees.bijection import (
    TrivalentTree,
    enum_trivalent,
    plane_to_trivalent,
    trivalent_bijection,
)
from src.assoctrees.comparison import (
    SPComparison,
    check_F2n_equals_SP,
    sp_comparison,
    theta_fan_equivalent,
)
from src.assoctrees.cones import (
    TreeCone,
    TreeInequality,
    cone_of_tree,
    stanley_pitman_fan,
    tree_of_point,
)
from src.assoctrees.trees import (
    LEAF,
    PlaneBinaryTree,
    catalan,
    enum_plane_binary,
    format_tree,
    node,
    parse_tree,
)

__all__ = [
    "LEAF",
    "PlaneBinaryTree",
    "SPComparison",
    "TreeCone",
    "TreeInequality",
    "TrivalentTree",
    "catalan",
    "check_F2n_equals_SP",
    "cone_of_tree",
    "enum_plane_binary",
    "enum_trivalent",
    "format_tree",
    "node",
    "parse_tree",
    "plane_to_trivalent",
    "sp_comparison",
    "stanley_pitman_fan",
    "theta_fan_equivalent",
    "tree_of_point",
    "trivalent_bijection",
]
