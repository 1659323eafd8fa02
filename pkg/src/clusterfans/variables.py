"""
The non-Plücker cluster variables of Gr(3,6) and their pullbacks to Gr(3,7)
"""

import logging
from dataclasses import dataclass
from typing import List, Literal, Sequence, Tuple

from src.exceptions import PositivityException
from src.utils.concurrency import parallel_map
from src.webdiagram import ExponentPolynomial, build_web, plucker_poly

logger = logging.getLogger(__name__)

Subset = Tuple[int, ...]
Product = Tuple[Subset, Subset]
Convention = Literal["order", "cyclic"]


@dataclass(frozen=True)
class ClusterVarExpr:
    """
    plus[0] * plus[1] - minus[0] * minus[1] in Plücker symbols, with its
    expansion in the inner-region variables of Web_{k,n}.
    """

    name: str
    k: int
    n: int
    plus: Product
    minus: Product
    expansion: ExponentPolynomial

    def symbolic(self) -> str:
        def fmt(p: Product) -> str:
            return " ".join("P" + "".join(map(str, K)) for K in p)

        return f"{fmt(self.plus)} - {fmt(self.minus)}"


# The two extra cluster variables of Gr(3,6). Y subtracts P123 P456; subtracting
# P156 P234 from P145 P236 instead goes negative on the positive part.
GR36_EXTRA: Tuple[Tuple[str, Product, Product], ...] = (
    ("X", ((1, 3, 4), (2, 5, 6)), ((1, 5, 6), (2, 3, 4))),
    ("Y", ((1, 4, 5), (2, 3, 6)), ((1, 2, 3), (4, 5, 6))),
)


def expand(name: str, k: int, n: int, plus: Product, minus: Product) -> ClusterVarExpr:
    """Expand the difference with signed integer arithmetic, then insist on positivity"""
    w = build_web(k, n)
    expansion = plucker_poly(w, plus[0], "inner") * plucker_poly(w, plus[1], "inner") - (
        plucker_poly(w, minus[0], "inner") * plucker_poly(w, minus[1], "inner")
    )
    if expansion.is_zero or not expansion.all_positive():
        logger.error(
            f"Cluster variable {name} is not subtraction-free",
            extra={"operation": "cluster_expand", "k": k, "n": n, "variable": name},
        )
        raise PositivityException(
            f"Expansion of {name} has non-positive coefficients",
            offending=name,
            details={"negative_terms": len(expansion.negative_terms())},
        )
    return ClusterVarExpr(
        name=name, k=k, n=n, plus=plus, minus=minus, expansion=expansion
    )


def extra_vars_gr36() -> List[ClusterVarExpr]:
    return [expand(name, 3, 6, plus, minus) for name, plus, minus in GR36_EXTRA]


def relabel(c: int, convention: Convention) -> Tuple[int, ...]:
    """
    Images of 1..6 in [7] minus {c}: in increasing order, or cyclically
    starting just after c.
    """
    if convention == "order":
        return tuple(t if t < c else t + 1 for t in range(1, 7))
    return tuple((c - 1 + t) % 7 + 1 for t in range(1, 7))


def _map_product(p: Product, image: Sequence[int]) -> Product:
    a, b = (tuple(sorted(image[t - 1] for t in K)) for K in p)
    return (a, b)


def _expand_job(job: Tuple[int, str, Product, Product]) -> ClusterVarExpr:
    c, name, plus, minus = job
    try:
        return expand(name, 3, 7, plus, minus)
    except PositivityException as e:
        raise PositivityException(
            f"Pullback of {name} along column {c} is not positive",
            offending=(c, name),
            original_error=e,
        )


def pullback_vars_gr37(
    convention: Convention = "order", threads: int = 1
) -> List[ClusterVarExpr]:
    """Both Gr(3,6) extras pulled back along each of the 7 column deletions"""
    jobs = []
    for c in range(1, 8):
        image = relabel(c, convention)
        for name, plus, minus in GR36_EXTRA:
            jobs.append(
                (c, f"{name}[{c}]", _map_product(plus, image), _map_product(minus, image))
            )
    exprs = parallel_map(_expand_job, jobs, threads)
    logger.info(
        f"Expanded {len(exprs)} pullback cluster variables",
        extra={"operation": "pullback_vars", "convention": convention, "count": len(exprs)},
    )
    return exprs
