"""
Exact polytopes: convex hulls, Minkowski sums and inner normal fans
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from src.exactgeom import cdd_backend
from src.exactgeom.cone import Cone
from src.exactgeom.fan import Fan
from src.exactgeom.vectors import (
    IntVector,
    RatVector,
    Rational,
    add,
    common_dim,
    dot,
    primitive,
    rat_vector,
)
from src.exceptions import DimensionMismatchException, GeometryException
from src.utils.concurrency import balanced_reduce

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Facet:
    """Inequality <normal, x> >= offset with a primitive integer normal"""

    normal: IntVector
    offset: Fraction

    def satisfied_by(self, x: Sequence[Rational]) -> bool:
        return dot(self.normal, x) >= self.offset

    def tight_at(self, x: Sequence[Rational]) -> bool:
        return dot(self.normal, x) == self.offset


@dataclass(frozen=True)
class Polytope:
    """
    Bounded polyhedron with both representations.

    vertices are sorted lexicographically. facets are the irredundant
    inequalities; equations (<normal, x> = offset) cut out the affine hull
    when the polytope is not full-dimensional.
    """

    ambient_dim: int
    vertices: Tuple[RatVector, ...]
    facets: Tuple[Facet, ...]
    equations: Tuple[Facet, ...]

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.equations)

    def contains(self, x: Sequence[Rational]) -> bool:
        return all(f.satisfied_by(x) for f in self.facets) and all(
            e.tight_at(x) for e in self.equations
        )

    def vertex_facets(self, vertex: RatVector) -> List[Facet]:
        """Facets tight at the given vertex"""
        return [f for f in self.facets if f.tight_at(vertex)]

    def round_trip_vertices(self) -> Tuple[RatVector, ...]:
        """Vertices recomputed from the H-representation alone"""
        if self.ambient_dim == 0 or (not self.facets and not self.equations):
            return self.vertices
        v = cdd_backend.h_to_v(
            [(-f.offset, *f.normal) for f in self.facets],
            [(-e.offset, *e.normal) for e in self.equations],
        )
        if v.rays or v.lines:
            raise GeometryException("H-representation is unbounded")
        return tuple(sorted(v.points))

    def is_consistent(self) -> bool:
        """Every vertex satisfies every facet and each is tight on >= dim facets"""
        for v in self.vertices:
            if not self.contains(v):
                return False
            if len(self.vertex_facets(v)) < self.dim:
                return False
        return self.round_trip_vertices() == self.vertices


def _to_facet(row: Sequence[Fraction]) -> Facet:
    # cdd row [b, a] means b + <a,x> >= 0, i.e. <a,x> >= -b
    b, a = row[0], row[1:]
    normal = primitive(a)
    nonzero = next(i for i, c in enumerate(a) if c != 0)
    factor = Fraction(normal[nonzero]) / Fraction(a[nonzero])
    return Facet(normal=normal, offset=-b * factor)


def convex_hull(points: Iterable[Sequence[Rational]]) -> Polytope:
    """Polytope spanned by a finite nonempty point set"""
    pts = sorted(set(rat_vector(p) for p in points))
    if not pts:
        raise GeometryException("Convex hull of an empty point set")
    dim = common_dim(pts)

    if dim == 0:
        return Polytope(ambient_dim=0, vertices=((),), facets=(), equations=())

    if len(pts) == 1:
        vertices: Tuple[RatVector, ...] = tuple(pts)
    else:
        vertices = tuple(sorted(rat_vector(v) for v in cdd_backend.reduce_v(pts)))

    h = cdd_backend.v_to_h(vertices)
    facets = tuple(
        sorted(
            {_to_facet(r) for r in h.inequalities if any(c != 0 for c in r[1:])},
            key=_facet_key,
        )
    )
    equations = tuple(_to_facet(r) for r in h.equations)

    logger.debug(
        f"Hull of {len(pts)} points: {len(vertices)} vertices, {len(facets)} facets",
        extra={
            "operation": "convex_hull",
            "points": len(pts),
            "vertices": len(vertices),
            "facets": len(facets),
        },
    )
    return Polytope(
        ambient_dim=dim, vertices=vertices, facets=facets, equations=equations
    )


def _facet_key(f: Facet) -> Tuple:
    return (f.normal, f.offset)


def minkowski_sum(p: Polytope, q: Polytope) -> Polytope:
    """Hull of all pairwise vertex sums"""
    if p.ambient_dim != q.ambient_dim:
        raise DimensionMismatchException(
            "Minkowski sum of polytopes in different spaces",
            expected=p.ambient_dim,
            actual=q.ambient_dim,
        )
    return convex_hull(add(v, w) for v in p.vertices for w in q.vertices)


def minkowski_sum_all(polytopes: Sequence[Polytope], threads: int = 1) -> Polytope:
    """Minkowski sum of many polytopes by balanced pairwise reduction"""
    if not polytopes:
        raise GeometryException("Minkowski sum of an empty family")
    return balanced_reduce(minkowski_sum, list(polytopes), threads)


def inner_normal_fan(p: Polytope) -> Fan:
    """
    Complete fan with one maximal cone per vertex v:
    {x : <x, v> <= <x, w> for all vertices w}.

    The cone at v is generated by the inner normals of the facets through v,
    plus the lines normal to the affine hull of p.
    """
    lines = [e.normal for e in p.equations]
    if p.dim == 0:
        return Fan.whole_space(p.ambient_dim)

    cones = []
    for v in p.vertices:
        rays = [f.normal for f in p.vertex_facets(v)]
        cones.append(Cone.from_generators(rays, lines, p.ambient_dim))
    return Fan(ambient_dim=p.ambient_dim, maximal_cones=tuple(cones), complete=True)
