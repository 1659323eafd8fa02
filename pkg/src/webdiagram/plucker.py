"""
Plücker polynomials, signed matrix entries and the determinant check
"""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Literal, Mapping, Sequence, Tuple

import sympy as sp

from src.exceptions import PositivityException, WebDiagramException
from src.webdiagram.diagram import WebDiagram
from src.webdiagram.paths import boundary_sets, path_families, paths_between
from src.webdiagram.polynomial import ExponentPolynomial

logger = logging.getLogger(__name__)

VarMode = Literal["all", "inner"]
Subset = Tuple[int, ...]


def k_subsets(k: int, n: int) -> List[Subset]:
    """All k-subsets of [n] in lexicographic order"""
    return list(combinations(range(1, n + 1), k))


def _exponent(w: WebDiagram, regions: Sequence[Tuple[int, int]], mode: VarMode) -> Tuple[int, ...]:
    if mode == "all":
        exp = [0] * len(w.regions)
        for region in regions:
            exp[w.region_position[region]] += 1
    else:
        exp = [0] * w.inner_dim
        for region in regions:
            pos = w.inner_position.get(region)
            if pos is not None:
                exp[pos] += 1
    return tuple(exp)


def plucker_poly(w: WebDiagram, K: Sequence[int], vars: VarMode = "inner") -> ExponentPolynomial:
    """
    P_K: one monomial per vertex-disjoint family, the product of the region
    variables below each of its paths. In inner mode outer regions are 1.
    """
    return _plucker_cached(w, tuple(sorted(K)), vars)


@lru_cache(maxsize=4096)
def _plucker_cached(w: WebDiagram, K: Subset, vars: VarMode) -> ExponentPolynomial:
    nvars = len(w.regions) if vars == "all" else w.inner_dim
    families = path_families(w, K)
    return ExponentPolynomial.from_monomials(
        nvars, (_exponent(w, f.regions_below(), vars) for f in families)
    )


def outer_exponents_constant(w: WebDiagram, K: Sequence[int]) -> bool:
    """True when every family in Path(K) covers the same outer regions"""
    outer = {r.grid_index for r in w.outer_regions}
    seen = {
        tuple(sorted(reg for reg in f.regions_below() if reg in outer))
        for f in path_families(w, K)
    }
    return len(seen) <= 1


def matrix_entry_poly(w: WebDiagram, i: int, j: int, vars: VarMode = "all") -> ExponentPolynomial:
    """
    Signed path generating function a_ij.

    Source columns give the identity block. For a sink column j the entry is
    (-1)^(k - i) times the sum over paths i -> j, the sign counting the
    sources strictly between i and j along the boundary; with it every
    maximal minor equals the Plücker polynomial with a plus sign.
    """
    if not (1 <= i <= w.k and 1 <= j <= w.n):
        raise WebDiagramException(
            f"Matrix index ({i}, {j}) out of range", k=w.k, n=w.n
        )
    nvars = len(w.regions) if vars == "all" else w.inner_dim
    if j <= w.k:
        return ExponentPolynomial.constant(nvars, 1 if i == j else 0)
    # sink columns carry (-1)^(k - i); source columns are the unsigned identity
    sign = (-1) ** (w.k - i)
    acc: Dict[Tuple[int, ...], int] = {}
    for path in paths_between(w, i, j):
        e = _exponent(w, path.regions_below(), vars)
        acc[e] = acc.get(e, 0) + sign
    return ExponentPolynomial.from_dict(nvars, acc)


def _region_vector(w: WebDiagram, assignment: Mapping[Tuple[int, int], Fraction]) -> List[Fraction]:
    values = []
    for r in w.regions:
        if r.grid_index not in assignment:
            raise WebDiagramException(
                f"Assignment lacks region {r.grid_index}", k=w.k, n=w.n
            )
        v = Fraction(assignment[r.grid_index])
        if v <= 0:
            raise PositivityException(
                "Region values must be strictly positive", offending=r.grid_index
            )
        values.append(v)
    return values


def lgv_check(w: WebDiagram, K: Sequence[int], assignment: Mapping[Tuple[int, int], Fraction]) -> bool:
    """
    Compare the K-minor of the evaluated path matrix with P_K evaluated at
    the same positive region values.
    """
    boundary_sets(w, K)
    point = _region_vector(w, assignment)
    columns = sorted(K)
    rows = []
    for i in range(1, w.k + 1):
        row = []
        for j in columns:
            value = matrix_entry_poly(w, i, j, "all").evaluate(point)
            row.append(sp.Rational(value.numerator, value.denominator))
        rows.append(row)
    det = sp.Matrix(rows).det()
    expected = plucker_poly(w, K, "all").evaluate(point)
    return sp.Rational(expected.numerator, expected.denominator) == det
