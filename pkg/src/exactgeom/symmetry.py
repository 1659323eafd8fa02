"""
Signed coordinate permutations relating two ray sets
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, Tuple

from src.exactgeom.vectors import IntVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignedPermutation:
    """Coordinate i of the image is signs[i] * x[perm[i]]"""

    perm: Tuple[int, ...]
    signs: Tuple[int, ...]

    def apply(self, v: Sequence[int]) -> IntVector:
        return tuple(s * v[p] for p, s in zip(self.perm, self.signs))

    def apply_all(self, vectors: Iterable[Sequence[int]]) -> Tuple[IntVector, ...]:
        return tuple(sorted(self.apply(v) for v in vectors))

    @classmethod
    def identity(cls, dim: int) -> "SignedPermutation":
        return cls(perm=tuple(range(dim)), signs=(1,) * dim)


def find_signed_permutation(
    source: Iterable[Sequence[int]],
    target: Iterable[Sequence[int]],
    accept: Optional[Callable[[SignedPermutation], bool]] = None,
) -> Optional[SignedPermutation]:
    """
    First signed permutation (in permutation-then-sign lexicographic order)
    mapping the source ray set onto the target ray set, or None.

    accept filters candidates further; a ray-preserving map it rejects is
    skipped.
    """
    src = [tuple(v) for v in source]
    tgt = {tuple(v) for v in target}
    if len(src) != len(tgt):
        return None
    if not src:
        return SignedPermutation((), ())
    dim = len(src[0])

    checked = 0
    for perm in itertools.permutations(range(dim)):
        for signs in itertools.product((1, -1), repeat=dim):
            checked += 1
            candidate = SignedPermutation(perm, signs)
            if all(candidate.apply(v) in tgt for v in src) and (
                accept is None or accept(candidate)
            ):
                logger.debug(
                    f"Signed permutation found after {checked} candidates",
                    extra={"operation": "coordinate_search", "checked": checked},
                )
                return candidate
    logger.debug(
        f"No signed permutation among {checked} candidates",
        extra={"operation": "coordinate_search", "checked": checked},
    )
    return None
