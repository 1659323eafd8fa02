"""
Data models for fan files, golden tables and verification reports
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator


class FanDocument(BaseModel):
    """On-disk JSON form of a pointed fan"""

    ambient_dim: int = Field(..., ge=0, description="Dimension of the ambient space")
    rays: List[List[int]] = Field(
        default_factory=list, description="Primitive rays, lexicographically sorted"
    )
    cones_by_dim: Dict[int, List[List[int]]] = Field(
        default_factory=dict, description="Ray index sets of all nonzero cones by dimension"
    )

    @model_validator(mode="after")
    def validate_indices(self) -> "FanDocument":
        for ray in self.rays:
            if len(ray) != self.ambient_dim:
                raise ValueError(
                    f"Ray {ray} does not have dimension {self.ambient_dim}"
                )
        for d, cones in self.cones_by_dim.items():
            if not 1 <= d <= self.ambient_dim:
                raise ValueError(f"Cone dimension {d} outside 1..{self.ambient_dim}")
            for cone in cones:
                if any(i < 0 or i >= len(self.rays) for i in cone):
                    raise ValueError(f"Cone {cone} references unknown rays")
        return self

    def f_vector(self) -> List[int]:
        return [len(self.cones_by_dim.get(d, [])) for d in range(1, self.ambient_dim + 1)]


class CoordinateMap(BaseModel):
    """Signed permutation: coordinate i of the image is signs[i] * x[perm[i]]"""

    perm: List[int]
    signs: List[int]

    @model_validator(mode="after")
    def validate_map(self) -> "CoordinateMap":
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"Not a permutation: {self.perm}")
        if len(self.signs) != len(self.perm) or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"Signs must be +1/-1, one per coordinate: {self.signs}")
        return self


class GoldenTable(BaseModel):
    """Published rays and counts for one fan"""

    name: str = Field(..., min_length=1)
    k: int = Field(..., ge=1)
    n: int = Field(..., ge=2)
    rays: List[List[int]]
    f_vector: List[int]
    facet_census: Dict[int, int]
    nonsimplicial_cones: List[List[List[int]]] = Field(
        default_factory=list, description="Ray vectors of each non-simplicial maximal cone"
    )
    refined_f_vector: Optional[List[int]] = None
    coordinate_map: Optional[CoordinateMap] = None
    inequalities: Optional[List[Dict[str, Any]]] = Field(
        default=None, description="Reference only, never asserted"
    )

    @field_validator("rays")
    @classmethod
    def validate_rays(cls, v: List[List[int]]) -> List[List[int]]:
        if len({tuple(r) for r in v}) != len(v):
            raise ValueError("Duplicate rays in golden table")
        return v


class CheckItem(BaseModel):
    """One compared quantity"""

    name: str
    passed: bool
    expected: Any = None
    actual: Any = None
    diff: List[str] = Field(default_factory=list)


class CheckReport(BaseModel):
    """Result of comparing a computation against golden data"""

    subject: str
    items: List[CheckItem] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def add(self, item: CheckItem) -> None:
        self.items.append(item)


class RegionEntry(BaseModel):
    index: int
    i: int
    j: int
    inner: bool


class WebDocument(BaseModel):
    """JSON dump of a web diagram"""

    k: int
    n: int
    regions: List[RegionEntry]


class FanSummary(BaseModel):
    """One-line JSON summary printed after a fan report"""

    ambient_dim: int
    trivial: bool = False
    rays: int = 0
    maximal_cones: int = 0
    f_vector: List[int] = Field(default_factory=list)
    facet_census: Dict[int, int] = Field(default_factory=dict)
