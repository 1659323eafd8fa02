"""Cluster-variable refinements of F_{3,6} and F_{3,7}"""

from src.clusterfans.refinement import (
    SplitEntry,
    SplitReport,
    cluster_ray_count_ok,
    cluster_variable_count,
    refine_by,
    refine_gr36,
    refine_gr37,
    split_report,
)
from src.clusterfans.variables import (
    GR36_EXTRA,
    ClusterVarExpr,
    expand,
    extra_vars_gr36,
    pullback_vars_gr37,
    relabel,
)

__all__ = [
    "GR36_EXTRA",
    "ClusterVarExpr",
    "SplitEntry",
    "SplitReport",
    "cluster_ray_count_ok",
    "cluster_variable_count",
    "expand",
    "extra_vars_gr36",
    "pullback_vars_gr37",
    "refine_by",
    "refine_gr36",
    "refine_gr37",
    "relabel",
    "split_report",
]
