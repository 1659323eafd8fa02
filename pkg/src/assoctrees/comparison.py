"""
F_{2,n} against the Stanley-Pitman fan
"""

import logging
import time
from dataclasses import dataclass

from src.assoctrees.cones import stanley_pitman_fan
from src.exceptions import TreeException
from src.tropfan import TropicalPolynomial, build_F, linearity_fan
from src.tropfan.fans import Route

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SPComparison:
    n: int
    f2n_cones: int
    sp_cones: int
    equal: bool


def sp_comparison(n: int, route: Route = "direct", threads: int = 1) -> SPComparison:
    """Build F_{2,n} and the tree cones and compare them as sets of canonical cones"""
    started = time.monotonic()
    f2n = build_F(2, n, route, threads)
    sp = stanley_pitman_fan(n)
    result = SPComparison(
        n=n,
        f2n_cones=len(f2n.maximal_cones),
        sp_cones=len(sp.maximal_cones),
        equal=f2n.same_cones(sp),
    )
    logger.info(
        f"F_{{2,{n}}} {'equals' if result.equal else 'differs from'} the Stanley-Pitman fan",
        extra={
            "operation": "sp_check",
            "n": n,
            "f2n_cones": result.f2n_cones,
            "sp_cones": result.sp_cones,
            "elapsed": round(time.monotonic() - started, 3),
        },
    )
    return result


def check_F2n_equals_SP(n: int, route: Route = "direct", threads: int = 1) -> bool:
    return sp_comparison(n, route, threads).equal


def _chain(start: int, stop: int, base: int, dim: int) -> TropicalPolynomial:
    """min over t = start..stop of x_base + ... + x_t, with x_0 = 0"""
    exponents = [
        tuple(1 if max(base, 1) <= s <= t else 0 for s in range(1, dim + 1))
        for t in range(start, stop + 1)
    ]
    return TropicalPolynomial(nvars=dim, exponents=tuple(exponents))


def theta_fan_equivalent(i: int, j: int, n: int) -> bool:
    """
    min(x_1+...+x_i, ..., x_1+...+x_j) and
    theta_ij = min(x_i, x_i+x_{i+1}, ..., x_i+...+x_j) have the same
    domains of linearity in R^{n-3}.
    """
    dim = n - 3
    if not (0 <= i <= j <= dim):
        raise TreeException(
            f"Need 0 <= i <= j <= {dim}, got i={i}, j={j}", details={"i": i, "j": j, "n": n}
        )
    prefix = _chain(i, j, 0, dim)
    theta = _chain(i, j, i, dim)
    return linearity_fan(prefix).same_cones(linearity_fan(theta))
