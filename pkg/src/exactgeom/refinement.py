"""
Common refinements of complete fans
"""

import logging
import time
from typing import List, Optional, Sequence

from src.exactgeom.cone import Cone
from src.exactgeom.fan import Fan
from src.exceptions import DimensionMismatchException, IncompleteFanException
from src.utils.concurrency import balanced_reduce, parallel_map

logger = logging.getLogger(__name__)


class _IntersectWith:
    """Picklable task: intersect one cone with every cone of a fan"""

    def __init__(self, others: Sequence[Cone]):
        self.others = tuple(others)

    def __call__(self, cone: Cone) -> List[Cone]:
        out = []
        for other in self.others:
            meet = cone.intersect(other)
            if meet is not None:
                out.append(meet)
        return out


def common_refinement(f: Fan, g: Fan, threads: int = 1) -> Fan:
    """
    Fan of all full-dimensional intersections of a maximal cone of f with one of g.
    """
    if f.ambient_dim != g.ambient_dim:
        raise DimensionMismatchException(
            "Refining fans in different spaces", expected=f.ambient_dim, actual=g.ambient_dim
        )
    if not (f.complete and g.complete):
        raise IncompleteFanException(
            "Common refinement needs complete fans",
            details={"left_complete": f.complete, "right_complete": g.complete},
        )
    if f.is_trivial:
        return g
    if len(g.maximal_cones) == 1 and not g.maximal_cones[0].halfspaces:
        return f
    if len(f.maximal_cones) == 1 and not f.maximal_cones[0].halfspaces:
        return g

    started = time.monotonic()
    chunks = parallel_map(_IntersectWith(g.maximal_cones), f.maximal_cones, threads)
    cones = [c for chunk in chunks for c in chunk]
    result = Fan(ambient_dim=f.ambient_dim, maximal_cones=tuple(cones), complete=True)

    logger.debug(
        f"Refined {len(f.maximal_cones)} x {len(g.maximal_cones)} cones "
        f"into {len(result.maximal_cones)}",
        extra={
            "operation": "refinement_step",
            "left": len(f.maximal_cones),
            "right": len(g.maximal_cones),
            "result": len(result.maximal_cones),
            "elapsed": round(time.monotonic() - started, 3),
        },
    )
    return result


def _refine_pair(f: Fan, g: Fan) -> Fan:
    return common_refinement(f, g)


def refine_all(fans: Sequence[Fan], threads: int = 1, ambient_dim: Optional[int] = None) -> Fan:
    """
    Common refinement of a family of complete fans.

    Sequential mode folds left to right; with threads > 1 the fold runs as a
    balanced reduction tree. Both give the same canonical fan.
    """
    if not fans:
        if ambient_dim is None:
            raise IncompleteFanException("Refinement of an empty family needs a dimension")
        return Fan.whole_space(ambient_dim)

    if threads <= 1:
        result = fans[0]
        for step, fan in enumerate(fans[1:], start=1):
            result = common_refinement(result, fan)
            logger.info(
                f"Refinement step {step}/{len(fans) - 1}: {len(result.maximal_cones)} cones",
                extra={
                    "operation": "refinement_fold",
                    "step": step,
                    "cones": len(result.maximal_cones),
                },
            )
        return result

    return balanced_reduce(_refine_pair, list(fans), threads)
