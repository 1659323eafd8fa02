"""
The rectangular web diagram Web_{k,n}.

Embedding: horizontal wires 1..k run top to bottom and end in the source
terminals on the right boundary; vertical wires k+1..n run right to left and
end in the sink terminals on the bottom boundary, so terminals read 1..n
clockwise. Grid vertex (r, c) is the crossing of horizontal wire r with
vertical wire c. Edges point left along horizontal wires and down along
vertical wires.

Region (i, j) is the face bounded above by horizontal wire i and on the left
by vertical wire j. It is inner when it is enclosed by wires on all four
sides, i.e. i < k and j > k + 1.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Tuple

import networkx as nx

from src.exceptions import WebDiagramException
from src.models.fan_models import RegionEntry, WebDocument

logger = logging.getLogger(__name__)

Node = Tuple[str, int, int]


def grid_node(row: int, col: int) -> Node:
    return ("v", row, col)


def terminal_node(label: int) -> Node:
    return ("t", label, 0)


@dataclass(frozen=True)
class Region:
    index: int
    i: int
    j: int
    inner: bool

    @property
    def grid_index(self) -> Tuple[int, int]:
        return (self.i, self.j)


@dataclass(frozen=True)
class WebDiagram:
    """Immutable Web_{k,n} with its regions in row-major order"""

    k: int
    n: int

    @cached_property
    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        k, n = self.k, self.n
        for r in range(1, k + 1):
            for c in range(k + 1, n + 1):
                g.add_node(grid_node(r, c))
        for label in range(1, n + 1):
            g.add_node(terminal_node(label))

        for r in range(1, k + 1):
            g.add_edge(terminal_node(r), grid_node(r, k + 1))
            for c in range(k + 1, n + 1):
                if c < n:
                    g.add_edge(grid_node(r, c), grid_node(r, c + 1))
                if r < k:
                    g.add_edge(grid_node(r, c), grid_node(r + 1, c))
                else:
                    g.add_edge(grid_node(r, c), terminal_node(c))
        return g

    @cached_property
    def regions(self) -> Tuple[Region, ...]:
        out: List[Region] = []
        for i in range(1, self.k + 1):
            for j in range(self.k + 1, self.n + 1):
                inner = i < self.k and j > self.k + 1
                out.append(Region(index=len(out), i=i, j=j, inner=inner))
        return tuple(out)

    @cached_property
    def inner_regions(self) -> Tuple[Region, ...]:
        """Inner regions in the canonical coordinate order (row-major)"""
        return tuple(r for r in self.regions if r.inner)

    @cached_property
    def outer_regions(self) -> Tuple[Region, ...]:
        return tuple(r for r in self.regions if not r.inner)

    @cached_property
    def region_position(self) -> Dict[Tuple[int, int], int]:
        return {r.grid_index: r.index for r in self.regions}

    @cached_property
    def inner_position(self) -> Dict[Tuple[int, int], int]:
        return {r.grid_index: pos for pos, r in enumerate(self.inner_regions)}

    @property
    def inner_dim(self) -> int:
        return (self.k - 1) * (self.n - self.k - 1)

    @property
    def sources(self) -> Tuple[int, ...]:
        return tuple(range(1, self.k + 1))

    @property
    def sinks(self) -> Tuple[int, ...]:
        return tuple(range(self.k + 1, self.n + 1))

    def is_region(self, i: int, j: int) -> bool:
        return 1 <= i <= self.k and self.k + 1 <= j <= self.n

    def region_order(self) -> List[Tuple[int, int]]:
        """Grid indices of the inner regions in coordinate order"""
        return [r.grid_index for r in self.inner_regions]

    def to_document(self) -> WebDocument:
        return WebDocument(
            k=self.k,
            n=self.n,
            regions=[
                RegionEntry(index=r.index, i=r.i, j=r.j, inner=r.inner)
                for r in self.regions
            ],
        )

    def render_text(self) -> str:
        """
        Text picture of the grid: wires drawn with '-' and '|', each region
        labelled x<m> (inner coordinate m) or o (outer). Sinks are listed
        under their wires, sources to the right of theirs.
        """
        cols = list(range(self.n, self.k, -1))
        width = 6
        lines: List[str] = []
        for i in range(1, self.k + 1):
            wire = "".join("+" + "-" * (width - 1) for _ in cols) + f"-> {i}"
            lines.append(wire)
            cells = []
            for j in cols:
                pos = self.inner_position.get((i, j))
                label = f"x{pos + 1}" if pos is not None else "o"
                cells.append(f"|{label:^{width - 1}}")
            lines.append("".join(cells))
        lines.append("".join(f"v{j:<{width - 1}}" for j in cols))
        return "\n".join(lines)


def build_web(k: int, n: int) -> WebDiagram:
    """Web_{k,n} for 1 <= k <= n - 1"""
    if not (isinstance(k, int) and isinstance(n, int)) or k < 1 or k > n - 1:
        raise WebDiagramException("Web diagram needs 1 <= k <= n - 1", k=k, n=n)
    w = WebDiagram(k=k, n=n)
    logger.debug(
        f"Built Web_{{{k},{n}}} with {len(w.regions)} regions",
        extra={
            "operation": "build_web",
            "k": k,
            "n": n,
            "regions": len(w.regions),
            "inner": len(w.inner_regions),
        },
    )
    return w
