"""
Positive parameterization of Gr(k,n) by region variables, its inverse and
the torus action.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from typing import Dict, Literal, Mapping, Optional, Sequence, Tuple

from src.exceptions import PositivityException, WebDiagramException
from src.webdiagram import build_web, k_subsets, plucker_poly

logger = logging.getLogger(__name__)

Subset = Tuple[int, ...]
RegionIndex = Tuple[int, int]
Mode = Literal["all", "inner"]


def _positive(value: object, where: object) -> Fraction:
    v = Fraction(value)  # type: ignore[arg-type]
    if v <= 0:
        raise PositivityException("Values must be strictly positive", offending=str(where))
    return v


@dataclass(frozen=True)
class PlueckerVector:
    """Positive Plücker coordinates indexed by sorted k-subsets of [n]"""

    k: int
    n: int
    entries: Tuple[Tuple[Subset, Fraction], ...]

    @classmethod
    def from_mapping(cls, k: int, n: int, entries: Mapping[Sequence[int], object]) -> "PlueckerVector":
        clean: Dict[Subset, Fraction] = {}
        for K, value in entries.items():
            key = tuple(sorted(K))
            if len(key) != k or len(set(key)) != k or key[0] < 1 or key[-1] > n:
                raise WebDiagramException(f"{list(K)} is not a {k}-subset of [{n}]", k=k, n=n)
            clean[key] = _positive(value, key)
        return cls(k=k, n=n, entries=tuple(sorted(clean.items())))

    @property
    def as_dict(self) -> Dict[Subset, Fraction]:
        return dict(self.entries)

    def __getitem__(self, K: Sequence[int]) -> Fraction:
        """Delta_K, with the empty set mapping to 1"""
        key = tuple(sorted(K))
        if not key:
            return Fraction(1)
        try:
            return self.as_dict[key]
        except KeyError:
            raise WebDiagramException(f"No Plücker coordinate for {list(key)}", k=self.k, n=self.n)

    @property
    def identity_subset(self) -> Subset:
        return tuple(range(1, self.k + 1))

    def normalized(self) -> "PlueckerVector":
        """Rescale so that Delta_[k] = 1"""
        base = self[self.identity_subset]
        return PlueckerVector(
            k=self.k, n=self.n, entries=tuple((K, v / base) for K, v in self.entries)
        )

    @property
    def is_normalized(self) -> bool:
        return self[self.identity_subset] == 1


@dataclass(frozen=True)
class RegionAssignment:
    """Positive values on all regions, or on inner regions only"""

    k: int
    n: int
    mode: Mode
    values: Tuple[Tuple[RegionIndex, Fraction], ...]

    @classmethod
    def from_mapping(
        cls, k: int, n: int, mode: Mode, values: Mapping[RegionIndex, object]
    ) -> "RegionAssignment":
        w = build_web(k, n)
        expected = {r.grid_index for r in (w.regions if mode == "all" else w.inner_regions)}
        if set(values) != expected:
            raise WebDiagramException(
                f"Assignment must cover exactly the {mode} regions",
                k=k,
                n=n,
                details={
                    "missing": sorted(expected - set(values)),
                    "unexpected": sorted(set(values) - expected),
                },
            )
        return cls(
            k=k,
            n=n,
            mode=mode,
            values=tuple(sorted((r, _positive(v, r)) for r, v in values.items())),
        )

    @classmethod
    def from_inner_vector(cls, k: int, n: int, coords: Sequence[object]) -> "RegionAssignment":
        """Inner assignment from values listed in coordinate order"""
        w = build_web(k, n)
        if len(coords) != w.inner_dim:
            raise WebDiagramException(
                f"Expected {w.inner_dim} inner values, got {len(coords)}", k=k, n=n
            )
        return cls.from_mapping(k, n, "inner", dict(zip(w.region_order(), coords)))

    @property
    def as_dict(self) -> Dict[RegionIndex, Fraction]:
        return dict(self.values)

    def inner_vector(self) -> Tuple[Fraction, ...]:
        w = build_web(self.k, self.n)
        d = self.as_dict
        return tuple(d[r] for r in w.region_order())

    def restrict_inner(self) -> "RegionAssignment":
        w = build_web(self.k, self.n)
        d = self.as_dict
        return RegionAssignment.from_mapping(
            self.k, self.n, "inner", {r: d[r] for r in w.region_order()}
        )

    def with_outer(self, outer: Optional[Mapping[RegionIndex, object]] = None) -> "RegionAssignment":
        """All-regions assignment; outer regions default to 1"""
        w = build_web(self.k, self.n)
        values: Dict[RegionIndex, object] = dict(self.as_dict)
        for r in w.outer_regions:
            if outer is not None and r.grid_index in outer:
                values[r.grid_index] = outer[r.grid_index]
            else:
                values.setdefault(r.grid_index, 1)
        return RegionAssignment.from_mapping(self.k, self.n, "all", values)


def phi1(x: RegionAssignment) -> PlueckerVector:
    """Delta_K = P_K evaluated at the region values"""
    if x.mode != "all":
        raise WebDiagramException("phi1 needs values on all regions", k=x.k, n=x.n)
    w = build_web(x.k, x.n)
    values = x.as_dict
    point = [values[r.grid_index] for r in w.regions]
    entries = {K: plucker_poly(w, K, "all").evaluate(point) for K in k_subsets(x.k, x.n)}
    return PlueckerVector.from_mapping(x.k, x.n, entries)


def K_index(i: int, j: int, k: int, n: int) -> Subset:
    """
    {1..i-1} together with {i+j-k..j} for a region (i, j); the empty tuple
    stands for the empty set, used for positions off the diagram.
    """
    if not (1 <= i <= k and k + 1 <= j <= n):
        return ()
    return tuple(range(1, i)) + tuple(range(i + j - k, j + 1))


def psi(d: PlueckerVector) -> RegionAssignment:
    """Region values recovered from normalized Plücker coordinates"""
    if not d.is_normalized:
        raise PositivityException(
            "psi needs normalized coordinates (Delta_[k] = 1)",
            offending=str(d[d.identity_subset]),
        )
    k, n = d.k, d.n
    w = build_web(k, n)

    def delta(i: int, j: int) -> Fraction:
        return d[K_index(i, j, k, n)]

    values: Dict[RegionIndex, Fraction] = {}
    for r in w.regions:
        i, j = r.i, r.j
        num = delta(i, j) * delta(i + 1, j - 2) * delta(i + 2, j - 1)
        den = delta(i, j - 1) * delta(i + 1, j) * delta(i + 2, j - 2)
        values[(i, j)] = num / den
    return RegionAssignment.from_mapping(k, n, "all", values)


def torus_rescale(d: PlueckerVector, lam: Sequence[object]) -> PlueckerVector:
    """Scale column i by lambda_i, then renormalize"""
    if len(lam) != d.n:
        raise WebDiagramException(f"Need {d.n} torus parameters, got {len(lam)}", k=d.k, n=d.n)
    factors = [_positive(v, f"lambda_{i + 1}") for i, v in enumerate(lam)]
    scaled = {
        K: v * reduce(lambda acc, i: acc * factors[i - 1], K, Fraction(1))
        for K, v in d.entries
    }
    return PlueckerVector.from_mapping(d.k, d.n, scaled).normalized()


def phi2(x: RegionAssignment) -> PlueckerVector:
    """Canonical orbit representative: phi1 with every outer region set to 1"""
    if x.mode != "inner":
        raise WebDiagramException("phi2 takes inner-region values", k=x.k, n=x.n)
    return phi1(x.with_outer())


def torus_to_representative(d: PlueckerVector) -> Tuple[Fraction, ...]:
    """
    Torus element carrying d to phi2 of its own inner region values.

    With lambda_k fixed to 1, the ratios on the subsets [k] - {s} + {j}
    determine every other lambda.
    """
    k, n = d.k, d.n
    d = d.normalized()
    target = phi2(psi(d).restrict_inner())

    def ratio(s: int, j: int) -> Fraction:
        K = tuple(sorted((set(range(1, k + 1)) - {s}) | {j}))
        return target[K] / d[K]

    lam = [Fraction(1)] * n
    for j in range(k + 1, n + 1):
        lam[j - 1] = ratio(k, j)
    for s in range(1, k):
        lam[s - 1] = ratio(k, k + 1) / ratio(s, k + 1)
    return tuple(lam)


def plucker_relations_hold(d: PlueckerVector) -> bool:
    """
    Every three-term relation
    Delta_{Sac} Delta_{Sbd} = Delta_{Sab} Delta_{Scd} + Delta_{Sad} Delta_{Sbc}
    for a < b < c < d outside S, |S| = k - 2.
    """
    k, n = d.k, d.n
    if k < 2 or n - k < 2:
        return True
    for S in combinations(range(1, n + 1), k - 2):
        rest = [i for i in range(1, n + 1) if i not in S]
        for a, b, c, e in combinations(rest, 4):

            def D(*extra: int) -> Fraction:
                return d[tuple(sorted(S + extra))]

            if D(a, c) * D(b, e) != D(a, b) * D(c, e) + D(a, e) * D(b, c):
                logger.debug(
                    f"Relation fails for S={S}, a,b,c,d={a, b, c, e}",
                    extra={"operation": "plucker_relations", "S": list(S)},
                )
                return False
    return True
