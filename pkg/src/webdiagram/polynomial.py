"""
Integer polynomials keyed by exponent vectors over region variables
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Sequence, Tuple

import sympy as sp

from src.exceptions import DimensionMismatchException

Exponent = Tuple[int, ...]


@lru_cache(maxsize=None)
def _gens(nvars: int) -> Tuple[sp.Symbol, ...]:
    return tuple(sp.symbols(f"x1:{nvars + 1}")) if nvars else ()


@dataclass(frozen=True)
class ExponentPolynomial:
    """
    Sum of coefficient * x^exponent over a fixed number of variables.

    terms holds (exponent, coefficient) pairs sorted by exponent with no zero
    coefficients. Products and differences go through sympy's sparse Poly.
    """

    nvars: int
    terms: Tuple[Tuple[Exponent, int], ...]

    @classmethod
    def from_dict(cls, nvars: int, terms: Mapping[Exponent, int]) -> "ExponentPolynomial":
        for e in terms:
            if len(e) != nvars:
                raise DimensionMismatchException(
                    "Exponent of wrong length", expected=nvars, actual=len(e)
                )
        return cls(
            nvars=nvars,
            terms=tuple(sorted((tuple(e), int(c)) for e, c in terms.items() if c != 0)),
        )

    @classmethod
    def from_monomials(cls, nvars: int, exponents: Iterable[Exponent]) -> "ExponentPolynomial":
        """Sum of the given monomials, each with coefficient 1 (repeats add up)"""
        acc: Dict[Exponent, int] = {}
        for e in exponents:
            acc[tuple(e)] = acc.get(tuple(e), 0) + 1
        return cls.from_dict(nvars, acc)

    @classmethod
    def constant(cls, nvars: int, value: int = 1) -> "ExponentPolynomial":
        return cls.from_dict(nvars, {(0,) * nvars: value})

    @property
    def as_dict(self) -> Dict[Exponent, int]:
        return dict(self.terms)

    @property
    def exponents(self) -> Tuple[Exponent, ...]:
        return tuple(e for e, _ in self.terms)

    @property
    def coefficients(self) -> Tuple[int, ...]:
        return tuple(c for _, c in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def all_positive(self) -> bool:
        return all(c > 0 for c in self.coefficients)

    def negative_terms(self) -> Dict[Exponent, int]:
        return {e: c for e, c in self.terms if c <= 0}

    def _check(self, other: "ExponentPolynomial") -> None:
        if self.nvars != other.nvars:
            raise DimensionMismatchException(
                "Polynomials over different variable sets",
                expected=self.nvars,
                actual=other.nvars,
            )

    def to_sympy(self) -> sp.Poly:
        if not self.nvars:
            raise DimensionMismatchException("No variables to build a sympy Poly over")
        return sp.Poly.from_dict(self.as_dict or {(0,) * self.nvars: 0}, _gens(self.nvars))

    @classmethod
    def from_sympy(cls, nvars: int, poly: sp.Poly) -> "ExponentPolynomial":
        return cls.from_dict(nvars, {tuple(e): int(c) for e, c in poly.as_dict().items()})

    def __add__(self, other: "ExponentPolynomial") -> "ExponentPolynomial":
        self._check(other)
        if not self.nvars:
            return ExponentPolynomial.constant(0, self._const() + other._const())
        return ExponentPolynomial.from_sympy(self.nvars, self.to_sympy() + other.to_sympy())

    def __sub__(self, other: "ExponentPolynomial") -> "ExponentPolynomial":
        self._check(other)
        if not self.nvars:
            return ExponentPolynomial.constant(0, self._const() - other._const())
        return ExponentPolynomial.from_sympy(self.nvars, self.to_sympy() - other.to_sympy())

    def __mul__(self, other: "ExponentPolynomial") -> "ExponentPolynomial":
        self._check(other)
        if not self.nvars:
            return ExponentPolynomial.constant(0, self._const() * other._const())
        return ExponentPolynomial.from_sympy(self.nvars, self.to_sympy() * other.to_sympy())

    def __neg__(self) -> "ExponentPolynomial":
        return ExponentPolynomial.from_dict(self.nvars, {e: -c for e, c in self.terms})

    def _const(self) -> int:
        return self.as_dict.get((), 0)

    def evaluate(self, values: Sequence) -> Fraction:
        """Exact value at a rational point"""
        if len(values) != self.nvars:
            raise DimensionMismatchException(
                "Evaluation point of wrong length", expected=self.nvars, actual=len(values)
            )
        point = [Fraction(v) for v in values]
        total = Fraction(0)
        for e, c in self.terms:
            term = Fraction(c)
            for x, power in zip(point, e):
                if power:
                    term *= x**power
            total += term
        return total

    def render(self) -> str:
        """Human-readable form such as 1 + x1 + x1*x2"""
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            factors = []
            for i, p in enumerate(e):
                if p == 1:
                    factors.append(f"x{i + 1}")
                elif p > 1:
                    factors.append(f"x{i + 1}^{p}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")
