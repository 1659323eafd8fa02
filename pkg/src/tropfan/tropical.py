"""
Min-plus tropical polynomials with all tropical coefficients 0
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Sequence, Tuple

from src.exactgeom import Fan, Polytope, convex_hull, inner_normal_fan
from src.exactgeom.vectors import dot
from src.exceptions import DimensionMismatchException, PositivityException, TropGrassException
from src.webdiagram.polynomial import Exponent, ExponentPolynomial


@dataclass(frozen=True)
class TropicalPolynomial:
    """x -> min over exponents a of <a, x>"""

    nvars: int
    exponents: Tuple[Exponent, ...]

    def __post_init__(self) -> None:
        if not self.exponents:
            raise TropGrassException("Tropical polynomial needs at least one exponent")
        object.__setattr__(self, "exponents", tuple(sorted(set(self.exponents))))

    @property
    def is_monomial(self) -> bool:
        return len(self.exponents) == 1

    def translation_key(self) -> FrozenSet[Exponent]:
        """Exponent set shifted to touch the coordinate hyperplanes; equal keys give equal fans"""
        low = [min(e[i] for e in self.exponents) for i in range(self.nvars)]
        return frozenset(tuple(c - m for c, m in zip(e, low)) for e in self.exponents)

    def minimizers(self, x: Sequence) -> List[Exponent]:
        """Exponents attaining the minimum at x"""
        values = [(dot(e, x), e) for e in self.exponents]
        best = min(v for v, _ in values)
        return [e for v, e in values if v == best]

    def newton_polytope(self) -> Polytope:
        return convex_hull(self.exponents)

    def render(self) -> str:
        """Text form such as min(0, x1, x1+x2)"""
        terms = []
        for e in self.exponents:
            parts = []
            for i, c in enumerate(e):
                if c == 1:
                    parts.append(f"x{i + 1}")
                elif c > 1:
                    parts.append(f"{c}x{i + 1}")
            terms.append("+".join(parts) if parts else "0")
        if len(terms) == 1:
            return terms[0]
        return f"min({', '.join(terms)})"


def tropicalize(p: ExponentPolynomial) -> TropicalPolynomial:
    """Replace + by min and * by +; only defined for subtraction-free p"""
    if p.is_zero:
        raise TropGrassException("Cannot tropicalize the zero polynomial")
    negative = p.negative_terms()
    if negative:
        raise PositivityException(
            "Tropicalization needs positive coefficients",
            offending={str(e): c for e, c in negative.items()},
        )
    return TropicalPolynomial(nvars=p.nvars, exponents=p.exponents)


def trop_eval(t: TropicalPolynomial, x: Sequence) -> Fraction:
    if len(x) != t.nvars:
        raise DimensionMismatchException(
            "Evaluation point of wrong length", expected=t.nvars, actual=len(x)
        )
    return min(dot(e, x) for e in t.exponents)


def linearity_fan(t: TropicalPolynomial) -> Fan:
    """Domains of linearity: the inner normal fan of the Newton polytope"""
    if t.nvars == 0:
        return Fan.whole_space(0)
    return inner_normal_fan(t.newton_polytope())
