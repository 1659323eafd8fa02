"""
Trivalent planar trees with n clockwise-labelled leaves, and their bijection
with plane binary trees on n-1 leaves
"""

from dataclasses import dataclass
from typing import FrozenSet, List, Tuple

from src.assoctrees.trees import LEAF, PlaneBinaryTree, enum_plane_binary, node
from src.exceptions import TreeException

Split = Tuple[int, int]


def _compatible(a: Split, b: Split) -> bool:
    (a1, a2), (b1, b2) = a, b
    return a2 < b1 or b2 < a1 or (a1 <= b1 and b2 <= a2) or (b1 <= a1 and a2 <= b2)


@dataclass(frozen=True)
class TrivalentTree:
    """
    A trivalent tree with leaves 1..n in clockwise order.

    Each of the n-3 internal edges is stored as the interval [a, b] of leaves
    on its side away from leaf 1, so 2 <= a < b <= n and the interval holds
    between 2 and n-2 leaves. Pairwise the intervals are nested or disjoint.
    """

    n: int
    splits: FrozenSet[Split]

    def __post_init__(self) -> None:
        n = self.n
        if n < 3:
            raise TreeException(f"A trivalent tree needs at least 3 leaves, got {n}")
        if len(self.splits) != n - 3:
            raise TreeException(
                f"A trivalent tree with {n} leaves has {n - 3} internal edges",
                details={"n": n, "splits": sorted(self.splits)},
            )
        for a, b in self.splits:
            if not (2 <= a < b <= n) or b - a + 1 > n - 2:
                raise TreeException(
                    f"[{a}, {b}] is not an internal edge of a tree with {n} leaves",
                    details={"n": n, "split": [a, b]},
                )
        ordered = sorted(self.splits)
        for i, s in enumerate(ordered):
            for t in ordered[i + 1 :]:
                if not _compatible(s, t):
                    raise TreeException(
                        f"Splits {list(s)} and {list(t)} cross",
                        details={"n": n, "splits": [list(s), list(t)]},
                    )

    def sorted_splits(self) -> List[Split]:
        return sorted(self.splits)


def trivalent_bijection(t: TrivalentTree) -> PlaneBinaryTree:
    """
    Contract the edge to leaf 1 and root the tree there; the remaining
    leaves 2..n read left to right.
    """
    splits = set(t.splits) | {(2, t.n)}

    def build(a: int, b: int) -> PlaneBinaryTree:
        if a == b:
            return LEAF
        inner = [c for (lo, c) in splits if lo == a and c < b]
        cut = max(inner) if inner else a
        if cut + 1 < b and (cut + 1, b) not in splits:
            raise TreeException(
                f"Leaves {a}..{b} do not split into two subtrees",
                details={"interval": [a, b]},
            )
        return node(build(a, cut), build(cut + 1, b))

    return build(2, t.n)


def plane_to_trivalent(p: PlaneBinaryTree) -> TrivalentTree:
    """Inverse of trivalent_bijection: reattach leaf 1 above the root"""
    n = p.leaves + 1
    intervals = [(a, b) for a, b in p.leaf_intervals(first=2) if (a, b) != (2, n)]
    return TrivalentTree(n=n, splits=frozenset(intervals))


def enum_trivalent(n: int) -> List[TrivalentTree]:
    return [plane_to_trivalent(p) for p in enum_plane_binary(n - 1)]
