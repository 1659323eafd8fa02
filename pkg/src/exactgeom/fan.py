"""
Polyhedral fans: face enumeration, statistics and completeness certificates
"""

import logging
import random
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import sympy as sp

from src.exactgeom.cone import Cone
from src.exactgeom.vectors import IntVector, dot
from src.exceptions import FanStructureException, NonPointedFanException
from src.models.fan_models import FanDocument

logger = logging.getLogger(__name__)

RaySet = Tuple[int, ...]


@dataclass(frozen=True)
class Fan:
    """
    Fan given by its maximal cones.

    Maximal cones are deduplicated and sorted by their canonical key on
    construction, so equal fans compare equal. Lower-dimensional faces are
    derived from rays and facet incidences and cached.
    """

    ambient_dim: int
    maximal_cones: Tuple[Cone, ...]
    complete: bool = False

    def __post_init__(self) -> None:
        unique = {c.key: c for c in self.maximal_cones}
        object.__setattr__(
            self, "maximal_cones", tuple(unique[k] for k in sorted(unique))
        )

    @classmethod
    def whole_space(cls, ambient_dim: int) -> "Fan":
        """The trivial complete fan with a single maximal cone"""
        return cls(
            ambient_dim=ambient_dim,
            maximal_cones=(Cone.whole_space(ambient_dim),),
            complete=True,
        )

    @property
    def canonical_key(self) -> FrozenSet:
        return frozenset(c.key for c in self.maximal_cones)

    def same_cones(self, other: "Fan") -> bool:
        return (
            self.ambient_dim == other.ambient_dim
            and self.canonical_key == other.canonical_key
        )

    @property
    def is_trivial(self) -> bool:
        return self.ambient_dim == 0

    @property
    def is_pointed(self) -> bool:
        return all(c.is_pointed for c in self.maximal_cones)

    @cached_property
    def rays(self) -> Tuple[IntVector, ...]:
        """All rays of the fan, lexicographically sorted"""
        return tuple(sorted({r for c in self.maximal_cones for r in c.rays}))

    @cached_property
    def ray_index(self) -> Dict[IntVector, int]:
        return {r: i for i, r in enumerate(self.rays)}

    @cached_property
    def maximal_ray_sets(self) -> Tuple[RaySet, ...]:
        """Global ray indices of each maximal cone, in maximal_cones order"""
        return tuple(
            tuple(sorted(self.ray_index[r] for r in c.rays)) for c in self.maximal_cones
        )

    def rays_of(self, indices: Sequence[int]) -> List[IntVector]:
        return [self.rays[i] for i in indices]

    def _require_pointed(self) -> None:
        if not self.is_pointed:
            lineality = max(len(c.lines) for c in self.maximal_cones)
            raise NonPointedFanException(
                "Fan has a nontrivial lineality space", lineality_dim=lineality
            )

    def _rank(self, indices: FrozenSet[int], cache: Dict[FrozenSet[int], int]) -> int:
        if not indices:
            return 0
        if indices not in cache:
            cache[indices] = sp.Matrix([list(self.rays[i]) for i in sorted(indices)]).rank()
        return cache[indices]

    @cached_property
    def cones_by_dim(self) -> Dict[int, Tuple[RaySet, ...]]:
        """
        Every nonzero cone of the fan as a sorted ray index tuple, grouped by dimension.

        Faces of a pointed cone are exactly the intersections of its facet
        ray sets, so each maximal cone's face poset is closed from its facets.
        """
        self._require_pointed()
        ranks: Dict[FrozenSet[int], int] = {}
        faces: Dict[int, set] = {d: set() for d in range(1, self.ambient_dim + 1)}

        for cone, ray_set in zip(self.maximal_cones, self.maximal_ray_sets):
            local = [frozenset(ray_set[i] for i in f) for f in cone.facet_ray_sets()]
            seen = {frozenset(ray_set)}
            queue = list(set(local))
            seen.update(queue)
            while queue:
                face = queue.pop()
                for facet in local:
                    meet = face & facet
                    if meet not in seen:
                        seen.add(meet)
                        queue.append(meet)
            for face in seen:
                d = self._rank(face, ranks)
                if d > 0:
                    faces[d].add(tuple(sorted(face)))

        result = {d: tuple(sorted(faces[d])) for d in faces}
        logger.debug(
            f"Enumerated faces of {len(self.maximal_cones)} maximal cones",
            extra={
                "operation": "face_enumeration",
                "ambient_dim": self.ambient_dim,
                "f_vector": [len(result[d]) for d in sorted(result)],
            },
        )
        return result

    def f_vector(self) -> Tuple[int, ...]:
        """Number of d-dimensional cones for d = 1..ambient_dim"""
        self._require_pointed()
        return tuple(len(self.cones_by_dim[d]) for d in range(1, self.ambient_dim + 1))

    def facet_census(self) -> Dict[int, int]:
        """Histogram: number of rays of a maximal cone -> number of such cones"""
        counts = Counter(len(c.rays) for c in self.maximal_cones)
        return dict(sorted(counts.items()))

    def nonsimplicial_cones(self) -> List[RaySet]:
        """Ray index sets of maximal cones with more rays than their dimension"""
        return sorted(
            rs
            for c, rs in zip(self.maximal_cones, self.maximal_ray_sets)
            if len(rs) > c.dim
        )

    def cone_containing(self, x: Sequence) -> Optional[Cone]:
        """First maximal cone containing x"""
        for c in self.maximal_cones:
            if c.contains(x):
                return c
        return None

    def verify_complete(self, samples: int = 200, seed: int = 0) -> bool:
        """
        Certify completeness.

        For pointed fans every facet of a maximal cone must be shared by exactly
        two maximal cones. Random integer points must each lie in some maximal
        cone and in the interior of at most one.
        """
        if self.is_trivial:
            return True

        if self.is_pointed:
            owners: Counter = Counter()
            for cone, ray_set in zip(self.maximal_cones, self.maximal_ray_sets):
                if cone.dim != self.ambient_dim:
                    raise FanStructureException(
                        "Maximal cone is not full-dimensional",
                        details={"rays": [list(r) for r in cone.rays]},
                    )
                for f in cone.facet_ray_sets():
                    owners[frozenset(ray_set[i] for i in f)] += 1
            unpaired = [sorted(f) for f, n in owners.items() if n != 2]
            if unpaired:
                raise FanStructureException(
                    f"{len(unpaired)} facets are not shared by exactly two maximal cones",
                    details={"unpaired": unpaired[:10]},
                )

        rng = random.Random(seed)
        for _ in range(samples):
            x = tuple(rng.randint(-20, 20) for _ in range(self.ambient_dim))
            holders = [c for c in self.maximal_cones if c.contains(x)]
            if not holders:
                raise FanStructureException(
                    "Sample point not covered by any maximal cone",
                    details={"point": list(x)},
                )
            strict = [
                c
                for c in holders
                if all(dot(a, x) > 0 for a in c.halfspaces)
            ]
            if len(strict) > 1:
                raise FanStructureException(
                    "Sample point interior to two maximal cones",
                    details={"point": list(x)},
                )

        logger.info(
            f"Fan certified complete with {len(self.maximal_cones)} maximal cones",
            extra={
                "operation": "verify_complete",
                "ambient_dim": self.ambient_dim,
                "maximal_cones": len(self.maximal_cones),
                "samples": samples,
            },
        )
        return True

    def to_document(self) -> FanDocument:
        if self.is_trivial:
            return FanDocument(ambient_dim=0, rays=[], cones_by_dim={})
        return FanDocument(
            ambient_dim=self.ambient_dim,
            rays=[list(r) for r in self.rays],
            cones_by_dim={
                d: [list(c) for c in cones] for d, cones in self.cones_by_dim.items()
            },
        )

    @classmethod
    def from_document(cls, doc: FanDocument, certify: bool = True) -> "Fan":
        """Rebuild the maximal cones from the top-dimensional entries of a fan file"""
        dim = doc.ambient_dim
        if dim == 0:
            return cls.whole_space(0)
        top = doc.cones_by_dim.get(dim, [])
        cones = tuple(
            Cone.from_generators([doc.rays[i] for i in idx], (), dim) for idx in top
        )
        fan = cls(ambient_dim=dim, maximal_cones=cones, complete=False)
        if certify and cones:
            fan.verify_complete(samples=0)
            fan = cls(ambient_dim=dim, maximal_cones=cones, complete=True)
        return fan


def euler_characteristic_ok(f_vector: Sequence[int], ambient_dim: int) -> bool:
    """
    Alternating count check for a complete pointed fan.

    With the zero cone counted, sum_{d=0}^{D} (-1)^d f_d equals (-1)^D.
    """
    total = 1 + sum((-1) ** d * f for d, f in enumerate(f_vector, start=1))
    return total == (-1) ** ambient_dim
