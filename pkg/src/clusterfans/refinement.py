"""
Refining F_{3,6} and F_{3,7} by the extra cluster variables, and how the
non-simplicial facets split
"""

import logging
from dataclasses import dataclass
from functools import reduce
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from src.clusterfans.variables import (
    ClusterVarExpr,
    Convention,
    extra_vars_gr36,
    pullback_vars_gr37,
)
from src.exactgeom import Fan, refine_all
from src.exactgeom.vectors import IntVector
from src.exceptions import RefinementException, WebDiagramException
from src.tropfan import build_F, linearity_fan, tropicalize
from src.tropfan.fans import Route
from src.utils.concurrency import parallel_map

logger = logging.getLogger(__name__)

RayTuple = Tuple[IntVector, ...]


def _cluster_fan(expr: ClusterVarExpr) -> Fan:
    return linearity_fan(tropicalize(expr.expansion))


def refine_by(base: Fan, exprs: Sequence[ClusterVarExpr], threads: int = 1) -> Fan:
    """Common refinement of base with the linearity fans of the tropicalized expressions"""
    fans = parallel_map(_cluster_fan, list(exprs), threads)
    refined = refine_all([base, *fans], threads=threads, ambient_dim=base.ambient_dim)
    logger.info(
        f"Refined {len(base.maximal_cones)} cones into {len(refined.maximal_cones)}",
        extra={
            "operation": "cluster_refine",
            "variables": len(exprs),
            "before": len(base.maximal_cones),
            "after": len(refined.maximal_cones),
        },
    )
    return refined


def refine_gr36(
    base: Optional[Fan] = None, route: Route = "direct", threads: int = 1
) -> Fan:
    """F_{3,6} refined by the two extra cluster variables: the type D4 fan"""
    if base is None:
        base = build_F(3, 6, route, threads)
    return refine_by(base, extra_vars_gr36(), threads)


def refine_gr37(
    base: Optional[Fan] = None,
    convention: Convention = "order",
    route: Route = "direct",
    threads: int = 1,
) -> Fan:
    """F_{3,7} refined by the fourteen pullback cluster variables: the type E6 fan"""
    if base is None:
        base = build_F(3, 7, route, threads)
    return refine_by(base, pullback_vars_gr37(convention, threads), threads)


@dataclass(frozen=True)
class SplitEntry:
    """A maximal cone of the coarser fan and the refined cones inside it"""

    parent: RayTuple
    children: Tuple[RayTuple, ...]
    dim: int

    @property
    def expected_children(self) -> int:
        return len(self.parent) - self.dim + 1

    @property
    def core(self) -> RayTuple:
        """Rays shared by all children"""
        common = reduce(lambda a, b: a & b, (set(c) for c in self.children))
        return tuple(sorted(common))

    def is_chain(self) -> bool:
        """
        Children glued in a row: consecutive ones share a facet, the adjacency
        graph is a path and all of them contain a core of dim - m + 1 rays.
        """
        m = len(self.children)
        if m == 1:
            return self.children[0] == self.parent
        graph = nx.Graph()
        graph.add_nodes_from(range(m))
        for a in range(m):
            for b in range(a + 1, m):
                if len(set(self.children[a]) & set(self.children[b])) == self.dim - 1:
                    graph.add_edge(a, b)
        is_path = (
            nx.is_connected(graph)
            and graph.number_of_edges() == m - 1
            and max(d for _, d in graph.degree()) <= 2
        )
        return is_path and len(self.core) == self.dim - m + 1


@dataclass(frozen=True)
class SplitReport:
    entries: Tuple[SplitEntry, ...]

    def child_counts(self) -> Dict[int, List[int]]:
        """Parent ray count -> sorted child counts seen"""
        out: Dict[int, List[int]] = {}
        for e in self.entries:
            out.setdefault(len(e.parent), []).append(len(e.children))
        return {k: sorted(v) for k, v in sorted(out.items())}

    def split_pattern(self) -> Dict[int, int]:
        """Parent ray count -> child count, when every parent of that size agrees"""
        return {k: v[0] for k, v in self.child_counts().items() if len(set(v)) == 1}

    @property
    def counts_ok(self) -> bool:
        return all(len(e.children) == e.expected_children for e in self.entries)

    @property
    def chains_ok(self) -> bool:
        return all(e.is_chain() for e in self.entries)


def _interior_sum(rays: Sequence[IntVector], dim: int) -> Tuple[int, ...]:
    return tuple(sum(r[i] for r in rays) for i in range(dim))


def split_report(before: Fan, after: Fan) -> SplitReport:
    """Assign every maximal cone of after to the maximal cone of before containing it"""
    if before.ambient_dim != after.ambient_dim:
        raise RefinementException(
            "Fans live in different spaces",
            details={"before": before.ambient_dim, "after": after.ambient_dim},
        )
    dim = before.ambient_dim
    children: Dict[int, List[RayTuple]] = {i: [] for i in range(len(before.maximal_cones))}
    for child in after.maximal_cones:
        point = _interior_sum(child.rays, dim)
        owners = [
            i
            for i, parent in enumerate(before.maximal_cones)
            if parent.contains(point) and parent.contains_cone(child)
        ]
        if len(owners) != 1:
            raise RefinementException(
                "Refined cone is not inside exactly one coarse cone",
                details={"rays": [list(r) for r in child.rays], "owners": len(owners)},
            )
        children[owners[0]].append(tuple(child.rays))

    empty = [i for i, c in children.items() if not c]
    if empty:
        raise RefinementException(
            f"{len(empty)} coarse cones contain no refined cone",
            details={"rays": [list(r) for r in before.maximal_cones[empty[0]].rays]},
        )

    entries = tuple(
        SplitEntry(parent=tuple(cone.rays), children=tuple(sorted(children[i])), dim=dim)
        for i, cone in enumerate(before.maximal_cones)
    )
    report = SplitReport(entries=entries)
    logger.info(
        f"Split report over {len(entries)} coarse cones",
        extra={
            "operation": "split_report",
            "before": len(before.maximal_cones),
            "after": len(after.maximal_cones),
            "pattern": report.split_pattern(),
        },
    )
    return report


# Number of non-frozen cluster variables for the finite-type Grassmannians beyond k = 2
_CLUSTER_VARIABLES = {(3, 6): 16, (3, 7): 42, (3, 8): 128}


def cluster_variable_count(k: int, n: int) -> int:
    if k == 1 or n - k == 1:
        return 0
    if k == 2 or n - k == 2:
        return n * (n - 3) // 2
    if (k, n) in _CLUSTER_VARIABLES:
        return _CLUSTER_VARIABLES[(k, n)]
    if (n - k, n) in _CLUSTER_VARIABLES:
        return _CLUSTER_VARIABLES[(n - k, n)]
    raise WebDiagramException(f"Gr({k},{n}) is not of finite cluster type", k=k, n=n)


def cluster_ray_count_ok(fan: Fan, k: int, n: int) -> bool:
    """Rays of the refined fan correspond to the non-frozen cluster variables"""
    return len(fan.rays) == cluster_variable_count(k, n)
