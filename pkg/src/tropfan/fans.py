"""
The fan F_{k,n}: common refinement of the linearity fans of all Trop P_K
"""

import logging
import random
import time
from fractions import Fraction
from typing import Dict, List, Literal, Sequence, Tuple

from src.exactgeom import Fan, Polytope, inner_normal_fan, minkowski_sum_all, refine_all
from src.exactgeom.vectors import add, scale
from src.exceptions import FanStructureException
from src.tropfan.tropical import TropicalPolynomial, linearity_fan, trop_eval, tropicalize
from src.utils.concurrency import parallel_map
from src.webdiagram import build_web, k_subsets, plucker_poly

logger = logging.getLogger(__name__)

Route = Literal["direct", "minkowski"]
Subset = Tuple[int, ...]


def tropical_plucker_family(k: int, n: int) -> Dict[Subset, TropicalPolynomial]:
    """Trop P_K in inner-region variables for every k-subset K"""
    w = build_web(k, n)
    return {K: tropicalize(plucker_poly(w, K, "inner")) for K in k_subsets(k, n)}


def distinct_nontrivial(polys: Sequence[TropicalPolynomial]) -> List[TropicalPolynomial]:
    """
    Drop single monomials (their fan is the whole space) and keep one
    representative per translation class of exponent sets.
    """
    seen = {}
    for t in polys:
        if t.is_monomial:
            continue
        seen.setdefault(t.translation_key(), t)
    return [seen[key] for key in sorted(seen, key=lambda s: sorted(s))]


def trop_phi2(k: int, n: int, x_inner: Sequence) -> Dict[Subset, Fraction]:
    """Tropicalized parameterization: K -> Trop P_K(x), outer variables at 0"""
    family = tropical_plucker_family(k, n)
    point = [Fraction(v) for v in x_inner]
    return {K: trop_eval(t, point) for K, t in family.items()}


def fan_of_polynomials(
    polys: Sequence[TropicalPolynomial],
    ambient_dim: int,
    route: Route = "direct",
    threads: int = 1,
) -> Fan:
    """Common refinement of the linearity fans of the given tropical polynomials"""
    family = distinct_nontrivial(polys)
    if not family:
        return Fan.whole_space(ambient_dim)

    if route == "minkowski":
        polytopes = parallel_map(_newton, family, threads)
        summed = minkowski_sum_all(polytopes, threads)
        logger.info(
            f"Minkowski sum has {len(summed.vertices)} vertices",
            extra={
                "operation": "minkowski_route",
                "summands": len(polytopes),
                "vertices": len(summed.vertices),
            },
        )
        return inner_normal_fan(summed)

    fans = parallel_map(linearity_fan, family, threads)
    fans.sort(key=lambda f: len(f.maximal_cones), reverse=True)
    return refine_all(fans, threads=threads, ambient_dim=ambient_dim)


def _newton(t: TropicalPolynomial) -> Polytope:
    return t.newton_polytope()


def build_F(k: int, n: int, route: Route = "direct", threads: int = 1) -> Fan:
    """
    F_{k,n} in R^{(k-1)(n-k-1)}.

    For k = 1 or n - k = 1 the space is a point; this is reported and the
    trivial fan returned.
    """
    w = build_web(k, n)
    dim = w.inner_dim
    if dim == 0:
        logger.warning(
            f"F_{{{k},{n}}} lives in a zero-dimensional space; returning the trivial fan",
            extra={"operation": "build_fan", "k": k, "n": n, "ambient_dim": 0},
        )
        return Fan.whole_space(0)

    started = time.monotonic()
    family = tropical_plucker_family(k, n)
    fan = fan_of_polynomials(list(family.values()), dim, route, threads)
    logger.info(
        f"Built F_{{{k},{n}}} with {len(fan.maximal_cones)} maximal cones",
        extra={
            "operation": "build_fan",
            "k": k,
            "n": n,
            "route": route,
            "ambient_dim": dim,
            "maximal_cones": len(fan.maximal_cones),
            "elapsed": round(time.monotonic() - started, 3),
        },
    )
    return fan


def build_F_cross_checked(k: int, n: int, threads: int = 1) -> Fan:
    """Build F_{k,n} by both refinement routes and insist they agree"""
    direct = build_F(k, n, "direct", threads)
    via_sum = build_F(k, n, "minkowski", threads)
    if not direct.same_cones(via_sum):
        raise FanStructureException(
            "Direct and Minkowski-sum refinements disagree",
            details={
                "k": k,
                "n": n,
                "direct_cones": len(direct.maximal_cones),
                "minkowski_cones": len(via_sum.maximal_cones),
            },
        )
    return direct


def linearity_witness(
    fan: Fan,
    polys: Sequence[TropicalPolynomial],
    samples: int = 5,
    seed: int = 0,
) -> bool:
    """
    Check that every tropical polynomial is linear on every maximal cone:
    at interior sample points the minimizing exponent is unique and constant.
    """
    rng = random.Random(seed)
    for cone in fan.maximal_cones:
        base = cone.interior_point()
        if base is None:
            raise FanStructureException(
                "Maximal cone has empty interior",
                details={"halfspaces": [list(a) for a in cone.halfspaces]},
            )
        points = [base]
        for _ in range(samples):
            p = base
            for ray in cone.rays:
                p = add(p, scale(Fraction(rng.randint(0, 5), rng.randint(1, 5)), ray))
            points.append(p)
        for t in polys:
            winners = {tuple(t.minimizers(p)) for p in points}
            if len(winners) != 1 or len(next(iter(winners))) != 1:
                raise FanStructureException(
                    f"{t.render()} is not linear on a maximal cone",
                    details={"halfspaces": [list(a) for a in cone.halfspaces]},
                )
    return True
