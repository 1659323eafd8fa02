"""
Order-preserving parallel map used by the refinement folds
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(func: Callable[[T], R], items: Sequence[T], threads: int = 1) -> List[R]:
    """
    Apply func to every item and return results in input order.

    threads == 1 runs in-process; anything larger uses a process pool. func and
    the items must be picklable in the parallel case.
    """
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    workers = min(threads, len(items))
    logger.debug(
        f"Dispatching {len(items)} tasks to {workers} workers",
        extra={"operation": "parallel_map", "tasks": len(items), "workers": workers},
    )
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def balanced_reduce(
    func: Callable[[T, T], T], items: Sequence[T], threads: int = 1
) -> T:
    """
    Fold items pairwise in a balanced tree.

    Each level combines neighbours (0,1), (2,3), ...; an odd tail is carried up.
    func must be associative; the caller canonicalizes the result.
    """
    if not items:
        raise ValueError("balanced_reduce needs at least one item")

    level = list(items)
    while len(level) > 1:
        pairs = [(level[i], level[i + 1]) for i in range(0, len(level) - 1, 2)]
        merged = parallel_map(_Pairwise(func), pairs, threads)
        if len(level) % 2:
            merged.append(level[-1])
        level = merged
    return level[0]


class _Pairwise:
    """Picklable adapter turning a binary function into a unary one on pairs"""

    def __init__(self, func: Callable[[T, T], T]):
        self.func = func

    def __call__(self, pair: tuple) -> T:
        return self.func(pair[0], pair[1])
