"""
Tree cones of the Stanley-Pitman fan and the point-to-tree recursion
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import List, Literal, Sequence, Tuple

from src.exactgeom import Cone, Fan
from src.exceptions import BoundaryPointException, TreeException
from src.assoctrees.trees import LEAF, PlaneBinaryTree, enum_plane_binary, node

logger = logging.getLogger(__name__)

Sense = Literal[1, -1]


@dataclass(frozen=True)
class TreeInequality:
    """sense * (x_lo + ... + x_hi) >= 0"""

    lo: int
    hi: int
    sense: Sense

    def normal(self, ambient_dim: int) -> Tuple[int, ...]:
        return tuple(
            self.sense if self.lo <= t <= self.hi else 0 for t in range(1, ambient_dim + 1)
        )

    def render(self) -> str:
        terms = "+".join(f"x{t}" for t in range(self.lo, self.hi + 1))
        return f"{terms} {'>=' if self.sense == 1 else '<='} 0"


@dataclass(frozen=True)
class TreeCone:
    """
    The cone C_T in R^{n-3} of a plane binary tree with n-1 leaves.

    Writing S_t = x_1 + ... + x_{t-1} (S_1 = 0), every parent p and internal
    child c contribute S_c >= S_p.
    """

    tree: PlaneBinaryTree
    n: int
    inequalities: Tuple[TreeInequality, ...]

    @property
    def ambient_dim(self) -> int:
        return self.n - 3

    @cached_property
    def cone(self) -> Cone:
        return Cone.from_inequalities(
            [q.normal(self.ambient_dim) for q in self.inequalities], self.ambient_dim
        )

    def contains(self, x: Sequence) -> bool:
        return self.cone.contains(x)


def cone_of_tree(t: PlaneBinaryTree, n: int) -> TreeCone:
    if t.leaves != n - 1:
        raise TreeException(
            f"A tree for n={n} needs {n - 1} leaves, got {t.leaves}",
            details={"n": n, "leaves": t.leaves},
        )
    inequalities = []
    for parent, child in sorted(t.labelled_edges()):
        if parent < child:
            inequalities.append(TreeInequality(lo=parent, hi=child - 1, sense=1))
        else:
            inequalities.append(TreeInequality(lo=child, hi=parent - 1, sense=-1))
    return TreeCone(tree=t, n=n, inequalities=tuple(inequalities))


def _partial_sums(x: Sequence[Fraction]) -> List[Fraction]:
    """S_1..S_{len(x)+1} with S_1 = 0"""
    sums = [Fraction(0)]
    for v in x:
        sums.append(sums[-1] + v)
    return sums


def tree_of_point(x: Sequence) -> PlaneBinaryTree:
    """
    The tree T with x in the interior of C_T.

    The root is the label t minimizing S_t; the left and right subtrees come
    from the same rule on the labels below and above it. A tie means x lies on
    a wall and is reported rather than broken.
    """
    point = [Fraction(v) for v in x]
    sums = _partial_sums(point)

    def build(lo: int, hi: int) -> PlaneBinaryTree:
        if lo > hi:
            return LEAF
        window = range(lo, hi + 1)
        best = min(sums[t - 1] for t in window)
        winners = [t for t in window if sums[t - 1] == best]
        if len(winners) > 1:
            raise BoundaryPointException(
                "Point lies on a wall of the Stanley-Pitman fan",
                tied_indices=winners,
                details={"point": [str(v) for v in point]},
            )
        root = winners[0]
        return node(build(lo, root - 1), build(root + 1, hi))

    return build(1, len(point) + 1)


def stanley_pitman_fan(n: int) -> Fan:
    """Complete fan in R^{n-3} whose maximal cones are the C_T"""
    if n < 4:
        raise TreeException(f"The Stanley-Pitman fan needs n >= 4, got {n}", details={"n": n})
    cones = [cone_of_tree(t, n).cone for t in enum_plane_binary(n - 1)]
    logger.debug(
        f"Stanley-Pitman fan for n={n} has {len(cones)} chambers",
        extra={"operation": "stanley_pitman_fan", "n": n, "maximal_cones": len(cones)},
    )
    return Fan(ambient_dim=n - 3, maximal_cones=tuple(cones), complete=True)
