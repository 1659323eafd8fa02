"""
Initial forms and the positivity test for the single Gr(2,4) Plücker relation
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Sequence, Tuple

from src.exactgeom.vectors import dot
from src.exceptions import DimensionMismatchException, TropGrassException
from src.webdiagram.polynomial import Exponent

# Coordinate order of Gr(2,4) weight vectors
GR24_SUBSETS: Tuple[Tuple[int, int], ...] = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


@dataclass(frozen=True)
class SignedPolynomial:
    """Polynomial with nonzero rational coefficients of either sign"""

    nvars: int
    terms: Tuple[Tuple[Exponent, Fraction], ...]

    @classmethod
    def from_dict(cls, nvars: int, terms: Mapping[Exponent, object]) -> "SignedPolynomial":
        clean = {}
        for e, c in terms.items():
            if len(e) != nvars:
                raise DimensionMismatchException(
                    "Exponent of wrong length", expected=nvars, actual=len(e)
                )
            if Fraction(c) != 0:
                clean[tuple(e)] = Fraction(c)
        return cls(nvars=nvars, terms=tuple(sorted(clean.items())))

    @property
    def as_dict(self) -> Dict[Exponent, Fraction]:
        return dict(self.terms)

    @property
    def signs(self) -> set:
        return {1 if c > 0 else -1 for _, c in self.terms}

    def has_mixed_signs(self) -> bool:
        return self.signs == {1, -1}


def init_form(f: SignedPolynomial, w: Sequence) -> SignedPolynomial:
    """Terms of f whose exponent minimizes the w-weight"""
    if not f.terms:
        raise TropGrassException("Initial form of the zero polynomial")
    if len(w) != f.nvars:
        raise DimensionMismatchException(
            "Weight vector of wrong length", expected=f.nvars, actual=len(w)
        )
    weights = {e: dot(e, w) for e, _ in f.terms}
    best = min(weights.values())
    return SignedPolynomial.from_dict(
        f.nvars, {e: c for e, c in f.terms if weights[e] == best}
    )


def _pair(a: Tuple[int, int], b: Tuple[int, int]) -> Exponent:
    return tuple(1 if s in (a, b) else 0 for s in GR24_SUBSETS)


# p13 p24 - p12 p34 - p14 p23
GR24_RELATION = SignedPolynomial.from_dict(
    6,
    {
        _pair((1, 3), (2, 4)): 1,
        _pair((1, 2), (3, 4)): -1,
        _pair((1, 4), (2, 3)): -1,
    },
)


def pos_membership_gr24(w: Sequence) -> bool:
    """
    True iff the initial form of the three-term relation at w has terms of
    both signs, i.e. w lies in the positive part of the tropical Gr(2,4).
    """
    if len(w) != 6:
        raise DimensionMismatchException(
            "Gr(2,4) weight vectors have six entries", expected=6, actual=len(w)
        )
    return init_form(GR24_RELATION, [Fraction(x) for x in w]).has_mixed_signs()
