"""
Directed paths and vertex-disjoint path families in Web_{k,n}
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

from src.exceptions import WebDiagramException
from src.webdiagram.diagram import Node, WebDiagram, terminal_node

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LatticePath:
    """
    A source-to-sink path.

    descents[r - source] is the vertical wire on which the path leaves
    horizontal wire r, for r = source..k; the last descent is the sink.
    """

    source: int
    sink: int
    nodes: Tuple[Node, ...]
    descents: Tuple[int, ...]

    @property
    def vertex_set(self) -> FrozenSet[Node]:
        return frozenset(self.nodes)

    def regions_below(self) -> List[Tuple[int, int]]:
        """Grid indices (i, j) of the regions lying below the path"""
        k = self.source + len(self.descents) - 1
        return [
            (self.source + offset, j)
            for offset, col in enumerate(self.descents)
            for j in range(k + 1, col + 1)
        ]


@dataclass(frozen=True)
class PathFamily:
    """Pairwise vertex-disjoint paths; the empty family is allowed"""

    paths: Tuple[LatticePath, ...]

    def regions_below(self) -> List[Tuple[int, int]]:
        return [region for p in self.paths for region in p.regions_below()]


def _descents(w: WebDiagram, source: int, nodes: Sequence[Node]) -> Tuple[int, ...]:
    last_col: Dict[int, int] = {}
    for kind, row, col in nodes:
        if kind == "v":
            last_col[row] = col
    return tuple(last_col[r] for r in range(source, w.k + 1))


def paths_between(w: WebDiagram, source: int, sink: int) -> List[LatticePath]:
    """All directed paths from a source terminal to a sink terminal"""
    if source not in w.sources or sink not in w.sinks:
        raise WebDiagramException(
            "Paths run from a source 1..k to a sink k+1..n",
            k=w.k,
            n=w.n,
            details={"source": source, "sink": sink},
        )
    target = terminal_node(sink)
    memo: Dict[Node, List[Tuple[Node, ...]]] = {}

    def walk(v: Node) -> List[Tuple[Node, ...]]:
        if v == target:
            return [(v,)]
        if v in memo:
            return memo[v]
        found: List[Tuple[Node, ...]] = []
        for nxt in w.graph.successors(v):
            for tail in walk(nxt):
                found.append((v, *tail))
        memo[v] = found
        return found

    return [
        LatticePath(
            source=source,
            sink=sink,
            nodes=nodes,
            descents=_descents(w, source, nodes),
        )
        for nodes in walk(terminal_node(source))
    ]


def boundary_sets(w: WebDiagram, K: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Sources [k] minus K and sinks K minus [k] for a k-subset K"""
    subset = tuple(sorted(set(K)))
    if len(subset) != w.k or len(subset) != len(K):
        raise WebDiagramException(
            f"Expected a {w.k}-subset of [{w.n}], got {list(K)}", k=w.k, n=w.n
        )
    if subset[0] < 1 or subset[-1] > w.n:
        raise WebDiagramException(
            f"Subset {list(K)} is not contained in [{w.n}]", k=w.k, n=w.n
        )
    sources = tuple(s for s in w.sources if s not in subset)
    sinks = tuple(j for j in subset if j > w.k)
    return sources, sinks


def path_families(w: WebDiagram, K: Sequence[int]) -> List[PathFamily]:
    """
    All vertex-disjoint path families from [k] minus K onto K minus [k].

    Backtracking over the sources in order, each trying every unused sink and
    every path that avoids the vertices already occupied.
    """
    sources, sinks = boundary_sets(w, K)
    if not sources:
        return [PathFamily(paths=())]

    by_pair = {
        (s, t): paths_between(w, s, t) for s, t in itertools.product(sources, sinks)
    }
    families: List[PathFamily] = []

    def extend(pos: int, used_sinks: Set[int], occupied: Set[Node], chosen: List[LatticePath]) -> None:
        if pos == len(sources):
            families.append(PathFamily(paths=tuple(chosen)))
            return
        s = sources[pos]
        for t in sinks:
            if t in used_sinks:
                continue
            for path in by_pair[(s, t)]:
                if occupied.isdisjoint(path.nodes):
                    chosen.append(path)
                    extend(pos + 1, used_sinks | {t}, occupied | path.vertex_set, chosen)
                    chosen.pop()

    extend(0, set(), set(), [])
    logger.debug(
        f"Path({list(K)}) has {len(families)} families",
        extra={"operation": "path_families", "K": list(K), "families": len(families)},
    )
    return families
