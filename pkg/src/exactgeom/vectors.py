"""
Exact rational vectors.

A RatVector is a plain tuple of Fractions; helpers here build, compare and
normalize them. No floating point is used anywhere in the kernel.
"""

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Tuple, Union

from src.exceptions import DimensionMismatchException

Rational = Union[int, Fraction]
RatVector = Tuple[Fraction, ...]
IntVector = Tuple[int, ...]


def rat_vector(coords: Iterable[Rational]) -> RatVector:
    """Build an exact vector from ints, Fractions or 'p/q' strings"""
    return tuple(Fraction(c) for c in coords)


def common_dim(vectors: Iterable[Sequence[Rational]]) -> int:
    """Shared length of all vectors; raises on mismatch or empty input"""
    dim = None
    for v in vectors:
        if dim is None:
            dim = len(v)
        elif len(v) != dim:
            raise DimensionMismatchException(
                "Vectors of different dimensions", expected=dim, actual=len(v)
            )
    if dim is None:
        raise DimensionMismatchException("No vectors given")
    return dim


def dot(a: Sequence[Rational], b: Sequence[Rational]) -> Fraction:
    if len(a) != len(b):
        raise DimensionMismatchException(
            "Dot product of vectors of different dimensions",
            expected=len(a),
            actual=len(b),
        )
    return Fraction(sum(Fraction(x) * Fraction(y) for x, y in zip(a, b)))


def add(a: Sequence[Rational], b: Sequence[Rational]) -> RatVector:
    if len(a) != len(b):
        raise DimensionMismatchException(
            "Sum of vectors of different dimensions", expected=len(a), actual=len(b)
        )
    return tuple(Fraction(x) + Fraction(y) for x, y in zip(a, b))


def sub(a: Sequence[Rational], b: Sequence[Rational]) -> RatVector:
    return add(a, tuple(-Fraction(y) for y in b))


def scale(c: Rational, a: Sequence[Rational]) -> RatVector:
    return tuple(Fraction(c) * Fraction(x) for x in a)


def is_zero(a: Sequence[Rational]) -> bool:
    return all(x == 0 for x in a)


def primitive(v: Sequence[Rational]) -> IntVector:
    """
    Primitive integer vector pointing in the direction of v.

    Denominators are cleared and the gcd divided out; the sign of v is kept.
    The zero vector maps to itself.
    """
    fracs = [Fraction(x) for x in v]
    if all(x == 0 for x in fracs):
        return tuple(0 for _ in fracs)
    denom = lcm(*(x.denominator for x in fracs))
    ints = [int(x * denom) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def unit_vector(dim: int, i: int, sign: int = 1) -> IntVector:
    return tuple(sign if j == i else 0 for j in range(dim))


def format_vector(v: Sequence[Rational]) -> str:
    """Compact rendering like e1-e2+2e4, used in reports and logs"""
    parts = []
    for i, c in enumerate(v):
        c = Fraction(c)
        if c == 0:
            continue
        coeff = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        parts.append(f"{sign}{coeff}e{i + 1}")
    if not parts:
        return "0"
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text
