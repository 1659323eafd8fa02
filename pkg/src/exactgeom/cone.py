"""
Polyhedral cones with exact H- and V-representations
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from src.exactgeom import cdd_backend
from src.exactgeom.vectors import IntVector, RatVector, Rational, dot, primitive, unit_vector
from src.exceptions import DimensionMismatchException

logger = logging.getLogger(__name__)


def _normalize(vectors: Iterable[Sequence[Rational]]) -> Tuple[IntVector, ...]:
    return tuple(
        sorted({primitive(v) for v in vectors if any(Fraction(c) != 0 for c in v)})
    )


@dataclass(frozen=True)
class Cone:
    """
    Cone {x : <a, x> >= 0 for a in halfspaces, <e, x> = 0 for e in equations}.

    halfspaces are primitive integer facet normals, irredundant and sorted, so
    two full-dimensional cones are equal iff their halfspaces are. Rays and
    lines are computed on demand.
    """

    ambient_dim: int
    halfspaces: Tuple[IntVector, ...]
    equations: Tuple[IntVector, ...] = field(default=())

    @classmethod
    def whole_space(cls, ambient_dim: int) -> "Cone":
        return cls(ambient_dim=ambient_dim, halfspaces=(), equations=())

    @classmethod
    def from_inequalities(
        cls, normals: Iterable[Sequence[Rational]], ambient_dim: int
    ) -> "Cone":
        """Canonical cone from possibly redundant inequalities <a, x> >= 0"""
        rows = [tuple(a) for a in normals]
        for a in rows:
            if len(a) != ambient_dim:
                raise DimensionMismatchException(
                    "Inequality of wrong dimension", expected=ambient_dim, actual=len(a)
                )
        rows = [a for a in rows if any(Fraction(c) != 0 for c in a)]
        if ambient_dim == 0 or not rows:
            return cls.whole_space(ambient_dim)

        h = cdd_backend.reduce_h([(0, *a) for a in rows])
        return cls(
            ambient_dim=ambient_dim,
            halfspaces=_normalize(r[1:] for r in h.inequalities),
            equations=_normalize(r[1:] for r in h.equations),
        )

    @classmethod
    def from_generators(
        cls,
        rays: Iterable[Sequence[Rational]],
        lines: Iterable[Sequence[Rational]] = (),
        ambient_dim: Optional[int] = None,
    ) -> "Cone":
        """Cone spanned by rays plus the linear span of lines"""
        ray_rows = [tuple(r) for r in rays]
        line_rows = [tuple(l) for l in lines]
        if ambient_dim is None:
            ambient_dim = len((ray_rows + line_rows)[0])
        if ambient_dim == 0:
            return cls.whole_space(0)

        origin = tuple(0 for _ in range(ambient_dim))
        h = cdd_backend.v_to_h([origin], ray_rows, line_rows)
        return cls(
            ambient_dim=ambient_dim,
            halfspaces=_normalize(r[1:] for r in h.inequalities),
            equations=_normalize(r[1:] for r in h.equations),
        )

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.equations)

    @property
    def key(self) -> Tuple[Tuple[IntVector, ...], Tuple[IntVector, ...]]:
        return (self.halfspaces, self.equations)

    @cached_property
    def _generators(self) -> Tuple[Tuple[IntVector, ...], Tuple[IntVector, ...]]:
        if not self.halfspaces and not self.equations:
            basis = tuple(unit_vector(self.ambient_dim, i) for i in range(self.ambient_dim))
            return (), basis
        v = cdd_backend.h_to_v(
            [(0, *a) for a in self.halfspaces], [(0, *e) for e in self.equations]
        )
        return _normalize(v.rays), _normalize(v.lines)

    @property
    def rays(self) -> Tuple[IntVector, ...]:
        """Primitive extreme rays, lexicographically sorted"""
        return self._generators[0]

    @property
    def lines(self) -> Tuple[IntVector, ...]:
        return self._generators[1]

    @property
    def is_pointed(self) -> bool:
        return not self.lines

    def contains(self, x: Sequence[Rational]) -> bool:
        return all(dot(a, x) >= 0 for a in self.halfspaces) and all(
            dot(e, x) == 0 for e in self.equations
        )

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains(r) for r in other.rays) and all(
            self.contains(l) and self.contains(tuple(-c for c in l)) for l in other.lines
        )

    def facet_ray_sets(self) -> List[FrozenSet[int]]:
        """For each halfspace, indices into self.rays of the rays on its hyperplane"""
        return [
            frozenset(i for i, r in enumerate(self.rays) if dot(a, r) == 0)
            for a in self.halfspaces
        ]

    def interior_point(self) -> Optional[RatVector]:
        """
        A point in the interior, or None if the cone is not full-dimensional.

        Solved as max t subject to <a, x> >= t, t <= 1, -1 <= x_j <= 1.
        """
        d = self.ambient_dim
        if self.equations:
            return None
        if not self.halfspaces:
            return tuple(Fraction(0) for _ in range(d))

        zeros = [0] * d
        rows: List[Tuple] = [(0, *a, -1) for a in self.halfspaces]
        rows.append((1, *zeros, -1))
        for j in range(d):
            e = unit_vector(d, j)
            rows.append((1, *(-c for c in e), 0))
            rows.append((1, *e, 0))
        optimum, solution = cdd_backend.lp_maximize(rows, (0, *zeros, 1))
        if optimum is None or solution is None or optimum <= 0:
            return None
        return tuple(solution[:d])

    def intersect(self, other: "Cone") -> Optional["Cone"]:
        """Full-dimensional intersection, or None when interiors are disjoint"""
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchException(
                "Intersecting cones in different spaces",
                expected=self.ambient_dim,
                actual=other.ambient_dim,
            )
        if self.equations or other.equations:
            return None
        mine = set(self.halfspaces)
        if any(tuple(-c for c in a) in mine for a in other.halfspaces):
            return None
        candidate = Cone(
            ambient_dim=self.ambient_dim,
            halfspaces=tuple(sorted(mine | set(other.halfspaces))),
        )
        if candidate.interior_point() is None:
            return None
        return Cone.from_inequalities(candidate.halfspaces, self.ambient_dim)
