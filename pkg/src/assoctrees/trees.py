"""
Plane binary trees with in-order internal labels
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb
from typing import Iterator, List, Optional, Tuple

from src.exceptions import TreeException


@dataclass(frozen=True)
class PlaneBinaryTree:
    """
    A leaf (both children None) or an internal node with ordered children.

    Internal nodes are labelled 1..m-1 in the order a left-to-right
    depth-first search first drops down to them from a child, which is the
    in-order numbering.
    """

    left: Optional["PlaneBinaryTree"] = None
    right: Optional["PlaneBinaryTree"] = None

    def __post_init__(self) -> None:
        if (self.left is None) != (self.right is None):
            raise TreeException("Internal nodes need exactly two children")

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @cached_property
    def leaves(self) -> int:
        if self.left is None or self.right is None:
            return 1
        return self.left.leaves + self.right.leaves

    @property
    def root_label(self) -> int:
        """In-order label of the root"""
        if self.left is None:
            raise TreeException("A leaf has no label")
        return self.left.leaves

    def labelled_edges(self, offset: int = 0) -> List[Tuple[int, int]]:
        """(parent label, child label) for every edge between internal nodes"""
        if self.left is None or self.right is None:
            return []
        me = offset + self.root_label
        edges: List[Tuple[int, int]] = []
        if not self.left.is_leaf:
            edges.append((me, offset + self.left.root_label))
            edges.extend(self.left.labelled_edges(offset))
        if not self.right.is_leaf:
            edges.append((me, me + self.right.root_label))
            edges.extend(self.right.labelled_edges(me))
        return edges

    def internal_labels(self, offset: int = 0) -> List[int]:
        if self.left is None or self.right is None:
            return []
        me = offset + self.root_label
        return self.left.internal_labels(offset) + [me] + self.right.internal_labels(me)

    def leaf_intervals(self, first: int = 1) -> List[Tuple[int, int]]:
        """Leaf range (a, b) below every internal node, leaves numbered from first"""
        if self.left is None or self.right is None:
            return []
        last = first + self.leaves - 1
        split = first + self.left.leaves
        return (
            [(first, last)]
            + self.left.leaf_intervals(first)
            + self.right.leaf_intervals(split)
        )


LEAF = PlaneBinaryTree()


def node(left: PlaneBinaryTree, right: PlaneBinaryTree) -> PlaneBinaryTree:
    return PlaneBinaryTree(left=left, right=right)


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


@lru_cache(maxsize=None)
def _enumerate(m: int) -> Tuple[PlaneBinaryTree, ...]:
    if m == 1:
        return (LEAF,)
    out = []
    for left_size in range(1, m):
        for left in _enumerate(left_size):
            for right in _enumerate(m - left_size):
                out.append(node(left, right))
    return tuple(out)


def enum_plane_binary(m: int) -> List[PlaneBinaryTree]:
    """All plane binary trees with m leaves; there are catalan(m - 1) of them"""
    if m < 1:
        raise TreeException(f"A tree needs at least one leaf, got {m}")
    return list(_enumerate(m))


def format_tree(t: PlaneBinaryTree) -> str:
    """Nested parentheses: a leaf is '.', a node is '(L R)'"""
    if t.left is None or t.right is None:
        return "."
    return f"({format_tree(t.left)} {format_tree(t.right)})"


def _tokens(text: str) -> Iterator[str]:
    for ch in text:
        if ch.isspace():
            continue
        if ch not in "().":
            raise TreeException(f"Unexpected character {ch!r} in tree {text!r}")
        yield ch


def parse_tree(text: str) -> PlaneBinaryTree:
    """Inverse of format_tree"""
    tokens = list(_tokens(text))
    pos = 0

    def parse() -> PlaneBinaryTree:
        nonlocal pos
        if pos >= len(tokens):
            raise TreeException(f"Truncated tree {text!r}")
        tok = tokens[pos]
        pos += 1
        if tok == ".":
            return LEAF
        if tok != "(":
            raise TreeException(f"Unexpected {tok!r} in tree {text!r}")
        left = parse()
        right = parse()
        if pos >= len(tokens) or tokens[pos] != ")":
            raise TreeException(f"Missing ')' in tree {text!r}")
        pos += 1
        return node(left, right)

    tree = parse()
    if pos != len(tokens):
        raise TreeException(f"Trailing input in tree {text!r}")
    return tree
